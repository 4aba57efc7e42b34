//! Instance generation and the scaling benchmark: planted hard instances
//! with growing minimal block size, timed under a budget.
//!
//! ```bash
//! cargo run --example generate_and_bench
//! ```

use altcodes::bench::{bench_fic, parse_grid};
use altcodes::fic::SearchBudget;
use altcodes::gen::{gen_instance, GenKind, GenParams};

fn main() {
    // the four generator kinds, same seed, deterministic output
    for kind in [
        GenKind::Prefix,
        GenKind::MaximalPrefix,
        GenKind::AltInduced,
        GenKind::RandomCode,
    ] {
        let inst = gen_instance(&GenParams {
            kind,
            alphabet_size: 2,
            size: 6,
            maxlen: 6,
            seed: 42,
        })
        .unwrap();
        print!("{kind:?}: {}", inst.language);
        if let Some(planted) = inst.planted {
            print!("  (= {planted})");
        }
        println!();
    }

    // a small grid; candidate counts grow with the minimal block size n
    let cells = parse_grid("k=2,size=8,maxlen=10,reps=3;k=2,size=16,maxlen=10,reps=3;k=2,size=24,maxlen=10,reps=3")
        .unwrap();
    let mut csv = Vec::new();
    let records = bench_fic(&cells, &SearchBudget::default(), &mut csv).unwrap();
    println!("\n{:<12} {:>3} {:>4} {:>11} {:>9}", "instance", "n", "|Z|", "candidates", "μs");
    for r in &records {
        println!(
            "{:<12} {:>3} {:>4} {:>11} {:>9}",
            r.instance, r.min_block_size, r.z_size, r.candidates, r.wall_micros
        );
    }
    println!("\nCSV output:\n{}", String::from_utf8(csv).unwrap());
}
