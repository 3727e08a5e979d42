//! Truth tables of the OR, AND and duplicator gadgets, and the duplicator's
//! tolerance to extra negative neighbors.

use homophily::gadgets::{build_and, build_duplicator, build_or, verify_gadget};

fn main() {
    println!("{}\n", verify_gadget(&build_or(), 0).expect("no extras"));
    println!("{}\n", verify_gadget(&build_and(), 0).expect("no extras"));
    let k = 6;
    let dup = build_duplicator(k).expect("k > 0");
    println!("{}\n", verify_gadget(&dup, 0).expect("extras below k"));
    for extra in 0..k {
        let r = verify_gadget(&dup, extra).expect("extras below k");
        println!("dup k={k} extra={extra}: {}", if r.passes() { "pass" } else { "fail" });
    }
}
