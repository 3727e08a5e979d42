//! Writes one DOT file per frame of the AND gadget on inputs (1, 1).

use std::fs;
use std::path::PathBuf;

use homophily::dot::{frame_name, to_dot};
use homophily::gadgets::build_and;

fn main() -> std::io::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map(PathBuf::from)
        .unwrap_or_else(|| std::env::temp_dir().join("and_trace"));
    fs::create_dir_all(&dir)?;
    let frames = build_and().trace(&[true, true]).expect("two inputs");
    for (i, g) in frames.iter().enumerate() {
        fs::write(dir.join(frame_name(i)), to_dot(g))?;
    }
    println!("wrote {} frames to {}", frames.len(), dir.display());
    Ok(())
}
