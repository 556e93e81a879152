use freelie::{Alphabet, LieSeries};
use scalars::Rational;
use std::time::Instant;

fn main() {
    let ab = Alphabet::new(["x", "y"]);
    let x = LieSeries::<Rational>::generator(ab.clone(), "x");
    let y = LieSeries::<Rational>::generator(ab.clone(), "y");
    let z = x.bch(&y);
    for d in [8u32, 10, 12, 14, 16] {
        let t = Instant::now();
        let n = z.part(d).len();
        println!("degree {d}: {n} terms in {:?}", t.elapsed());
    }
}
