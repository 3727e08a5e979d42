//! `lhe`: simulate, solve, compile and inspect local homophily instances.
//!
//! Exit codes: 0 on success (a `false` LHE answer included), 1 on usage
//! errors, 2 on unreadable or malformed input.

use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use homophily::circuit::{parse_assignment, parse_circuit, parse_netlist, print_netlist, synchronize};
use homophily::compiler::{compile, compile_streaming, instance_size, placement_table, ReductionParams};
use homophily::document::{parse_document, serialize_document, write_document, GraphDocument};
use homophily::dot::{frame_name, to_dot_with, DotOptions};
use homophily::flower::{run_flower_lemma, FlowerSpec};
use homophily::gadgets::{build_and, build_duplicator, build_or, verify_gadget, Gadget};
use homophily::graph::{apply_word_traced, BicoloredGraph, VertexId};
use homophily::lhe::solve_lhe;

#[derive(Parser)]
#[command(name = "lhe", version, about = "Local homophily transformations on bicolored graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Apply a document's word and print the final graph (or every frame).
    Simulate {
        /// Graph document, `-` for stdin.
        input: PathBuf,
        /// Print the graph after every step.
        #[arg(long)]
        trace: bool,
        /// Write one DOT file per frame into this directory.
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
    },
    /// Decide an LHE instance: prints `true` or `false`.
    Solve {
        /// Graph document with word and target, `-` for stdin.
        input: PathBuf,
    },
    /// Compile a circuit netlist into an LHE instance.
    Compile {
        /// Circuit netlist, `-` for stdin.
        netlist: PathBuf,
        /// `name=0|1` lines overriding inline input values.
        #[arg(long, value_name = "FILE")]
        assignment: Option<PathBuf>,
        /// Output document (stdout when absent). The placement table goes
        /// to `<FILE>.placements`.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Write the document without building the graph in memory.
        #[arg(long)]
        stream: bool,
        /// Print k and the instance size to stderr.
        #[arg(long)]
        params: bool,
        /// Use this flower size instead of the sufficient bound.
        #[arg(long)]
        k: Option<usize>,
        /// Insert buffers into a non-synchronous netlist first.
        #[arg(long)]
        synchronize: bool,
        /// Write the placement table here.
        #[arg(long, value_name = "FILE")]
        placements: Option<PathBuf>,
    },
    /// Check a gadget's truth table, or run one input combination.
    Gadget {
        kind: GadgetArg,
        /// Duplicator flower size.
        #[arg(long, default_value_t = 5)]
        k: usize,
        /// Input bits, e.g. `10` (first slot first).
        #[arg(long)]
        inputs: Option<String>,
        /// Extra -1 neighbors attached to duplicator vertex 1.
        #[arg(long, default_value_t = 0)]
        extra: usize,
        /// Print every frame of the run (requires --inputs).
        #[arg(long)]
        trace: bool,
        /// Write DOT frames of the run (requires --inputs).
        #[arg(long, value_name = "DIR")]
        dot: Option<PathBuf>,
    },
    /// Check the flower lemma on F_{n,m}.
    Flower {
        /// Number of centers.
        #[arg(long)]
        n: usize,
        /// Petal size.
        #[arg(long)]
        m: usize,
        /// Number of centers to update (default: every k in 1..=n).
        #[arg(long)]
        k: Option<usize>,
    },
    /// Parse and re-serialize a graph document (or netlist) canonically.
    Roundtrip {
        /// Graph document or netlist, `-` for stdin.
        input: PathBuf,
        /// Treat the input as a netlist.
        #[arg(long)]
        netlist: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GadgetArg {
    Or,
    And,
    Dup,
}

enum Failure {
    Usage(String),
    Input(String),
}

type Outcome = Result<(), Failure>;

fn input_err(e: impl std::fmt::Display) -> Failure {
    Failure::Input(e.to_string())
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(input_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

fn read_document(path: &Path) -> Result<GraphDocument, Failure> {
    let text = read_text(path)?;
    parse_document(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_dot_frames(dir: &Path, frames: &[BicoloredGraph], labels: Option<&dyn Fn(VertexId) -> String>) -> Outcome {
    fs::create_dir_all(dir).map_err(input_err)?;
    for (i, g) in frames.iter().enumerate() {
        let name = format!("frame{i}");
        let opts = DotOptions {
            name: Some(&name),
            labels,
            highlight: None,
        };
        fs::write(dir.join(frame_name(i)), to_dot_with(g, &opts)).map_err(input_err)?;
    }
    Ok(())
}

fn print_trace(out: &mut impl Write, frames: &[BicoloredGraph], word: &[VertexId]) -> io::Result<()> {
    for (i, g) in frames.iter().enumerate() {
        match i {
            0 => writeln!(out, "# frame 0: initial")?,
            _ => writeln!(out, "# frame {i}: after vertex {}", word[i - 1])?,
        }
        write_document(&GraphDocument::bare(g.clone()), &mut *out)?;
    }
    Ok(())
}

fn simulate(input: &Path, trace: bool, dot: Option<&Path>) -> Outcome {
    let doc = read_document(input)?;
    let word = doc
        .word
        .clone()
        .ok_or_else(|| Failure::Input("document has no word".into()))?;
    let frames = apply_word_traced(&doc.graph, &word).map_err(input_err)?;
    if let Some(dir) = dot {
        write_dot_frames(dir, &frames, None)?;
    }
    let mut out = BufWriter::new(io::stdout().lock());
    if trace {
        print_trace(&mut out, &frames, &word.0).map_err(input_err)?;
    } else {
        let last = GraphDocument {
            graph: frames.last().expect("trace has the initial frame").clone(),
            word: doc.word,
            target: doc.target,
        };
        write_document(&last, &mut out).map_err(input_err)?;
    }
    out.flush().map_err(input_err)
}

fn solve(input: &Path) -> Outcome {
    let inst = read_document(input)?.into_instance().map_err(input_err)?;
    let answer = solve_lhe(&inst).map_err(input_err)?;
    println!("{answer}");
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn compile_cmd(
    netlist: &Path,
    assignment: Option<&Path>,
    out: Option<&Path>,
    stream: bool,
    show_params: bool,
    k: Option<usize>,
    sync: bool,
    placements: Option<&Path>,
) -> Outcome {
    let text = read_text(netlist)?;
    let (c, inline) = if sync {
        let (c, a) = parse_netlist(&text).map_err(input_err)?;
        let s = synchronize(&c).map_err(input_err)?;
        // carry inline values over by name
        let mut moved = homophily::circuit::Assignment::new();
        for g in c.inputs() {
            if let Some(v) = a.get(g) {
                moved.set(s.find(&c.gate(g).name).expect("inputs survive"), v);
            }
        }
        (s, moved)
    } else {
        parse_circuit(&text).map_err(input_err)?
    };
    let a = match assignment {
        Some(p) => parse_assignment(&read_text(p)?, &c, &inline).map_err(input_err)?,
        None => inline,
    };
    let params = match k {
        Some(k) => ReductionParams::fixed(k),
        None => ReductionParams::default(),
    };
    if show_params {
        let size = instance_size(&c, &params).map_err(input_err)?;
        let bound = ReductionParams::bound(&c).map_err(input_err)?;
        eprintln!(
            "gates={} and={} or={} depth={} bound_k={bound} {size}",
            c.len(),
            c.n_and(),
            c.n_or(),
            c.depth()
        );
    }
    let sidecar = placements
        .map(Path::to_path_buf)
        .or_else(|| out.map(|p| PathBuf::from(format!("{}.placements", p.display()))));

    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(fs::File::create(p).map_err(input_err)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let table = if stream {
        compile_streaming(&c, &a, &params, sink).map_err(input_err)?;
        match &sidecar {
            Some(_) => Some(placement_table(&c, &a, &params).map_err(input_err)?),
            None => None,
        }
    } else {
        let compiled = compile(&c, &a, &params).map_err(input_err)?;
        let mut sink = sink;
        write_document(&compiled.instance.into(), &mut sink).map_err(input_err)?;
        sink.flush().map_err(input_err)?;
        Some(compiled.placements)
    };
    if let (Some(path), Some(table)) = (sidecar, table) {
        fs::write(&path, table.to_text()).map_err(input_err)?;
    }
    Ok(())
}

fn gadget_cmd(
    kind: GadgetArg,
    k: usize,
    inputs: Option<&str>,
    extra: usize,
    trace: bool,
    dot: Option<&Path>,
) -> Outcome {
    let g: Gadget = match kind {
        GadgetArg::Or => build_or(),
        GadgetArg::And => build_and(),
        GadgetArg::Dup => build_duplicator(k).map_err(|e| Failure::Usage(e.to_string()))?,
    };
    let Some(bits) = inputs else {
        if trace || dot.is_some() {
            return Err(Failure::Usage("--trace and --dot need --inputs".into()));
        }
        let report = verify_gadget(&g, extra).map_err(|e| Failure::Usage(e.to_string()))?;
        println!("{report}");
        return Ok(());
    };
    let values = bits
        .chars()
        .map(|ch| match ch {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Failure::Usage(format!("--inputs takes 0/1 digits, got `{bits}`"))),
        })
        .collect::<Result<Vec<bool>, _>>()?;
    let start = g.prepare(&values, extra).map_err(|e| Failure::Usage(e.to_string()))?;
    let frames = apply_word_traced(&start, &g.word).map_err(input_err)?;
    if let Some(dir) = dot {
        let label = |v: VertexId| Gadget::label(v).to_string();
        write_dot_frames(dir, &frames, Some(&label))?;
    }
    let mut out = BufWriter::new(io::stdout().lock());
    if trace {
        print_trace(&mut out, &frames, &g.word.0).map_err(input_err)?;
    }
    let outputs = g.read_outputs(frames.last().expect("initial frame"));
    let expected = g.template.expected(&values);
    let show = |v: &[bool]| v.iter().map(|&b| if b { '1' } else { '0' }).collect::<String>();
    writeln!(
        out,
        "{} inputs={bits} outputs={} expected={}",
        g.kind(),
        show(&outputs),
        show(&expected)
    )
    .map_err(input_err)?;
    out.flush().map_err(input_err)
}

fn flower_cmd(n: usize, m: usize, k: Option<usize>) -> Outcome {
    let spec = FlowerSpec::new(n, m).map_err(|e| Failure::Usage(e.to_string()))?;
    let ks: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (1..=n).collect(),
    };
    let mut all = true;
    for k in ks {
        let (_, report) = run_flower_lemma(spec, k).map_err(|e| Failure::Usage(e.to_string()))?;
        for (claim, ok) in report.verdicts() {
            println!("n={n} m={m} k={k} {claim}: {}", if ok { "ok" } else { "FAIL" });
        }
        all &= report.all();
    }
    println!("verdict {}", if all { "pass" } else { "fail" });
    Ok(())
}

fn roundtrip(input: &Path, netlist: bool) -> Outcome {
    let text = read_text(input)?;
    let out = if netlist {
        let (c, a) = parse_netlist(&text).map_err(input_err)?;
        print_netlist(&c, Some(&a))
    } else {
        serialize_document(&parse_document(&text).map_err(input_err)?)
    };
    io::stdout().write_all(out.as_bytes()).map_err(input_err)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Simulate { input, trace, dot } => simulate(&input, trace, dot.as_deref()),
        Command::Solve { input } => solve(&input),
        Command::Compile {
            netlist,
            assignment,
            out,
            stream,
            params,
            k,
            synchronize,
            placements,
        } => compile_cmd(
            &netlist,
            assignment.as_deref(),
            out.as_deref(),
            stream,
            params,
            k,
            synchronize,
            placements.as_deref(),
        ),
        Command::Gadget {
            kind,
            k,
            inputs,
            extra,
            trace,
            dot,
        } => gadget_cmd(kind, k, inputs.as_deref(), extra, trace, dot.as_deref()),
        Command::Flower { n, m, k } => flower_cmd(n, m, k),
        Command::Roundtrip { input, netlist } => roundtrip(&input, netlist),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
