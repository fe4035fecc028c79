use lattice_walks::asymptotics::*;
fn main() {
    for s in ["0,1;1,0;1,1", "0,1;0,2;1,0;1,1;2,0", "0,1;2,0"] {
        let cfg = BookConfig::new(
            s.parse().unwrap(),
            6,
            vec![NRange::new(100, 110), NRange::new(190, 200)],
        );
        let t = subset_theorem(&cfg.steps, &cfg).unwrap();
        print!("{}: ", t.steps.label());
        for c in &t.constants {
            print!(
                "[{} | {}] ",
                &c.fits[0].decimal[..8.min(c.fits[0].decimal.len())],
                &c.fits[1].decimal[..8.min(c.fits[1].decimal.len())]
            );
        }
        println!();
    }
}
