//! Prints the storybook for the five-step set over n = 100..110 and 190..200.

use std::time::Instant;

use lattice_walks::asymptotics::{book, latex_table, storybook_text, BookConfig, NRange};

fn main() {
    let steps = "1,0;0,1;1,1;2,0;0,2".parse().expect("valid steps");
    let cfg = BookConfig::new(steps, 6, vec![NRange::new(100, 110), NRange::new(190, 200)]);
    let start = Instant::now();
    let b = book(&cfg).expect("valid config");
    eprintln!("computed in {:.1?}", start.elapsed());
    println!("{}", storybook_text(&b));
    println!("{}", latex_table(&b));
}
