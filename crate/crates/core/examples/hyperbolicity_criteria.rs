//! Segre, jet-2 and geography verdicts, and Horikawa's classification of
//! a Chern pair on the Noether line.

use orbigeo::rational::rat;
use orbigeo::{check_segre, classify_horikawa, cyclic_cover_chern, geography, jet2_bound, ChernReport};

fn main() -> orbigeo::Result<()> {
    let steiner = ChernReport::new(rat(1, 1), rat(11, 32));
    println!("{}", check_segre(&steiner).line());
    let (v, coefficient) = jet2_bound(&steiner);
    println!("{}\n  m^4 coefficient {coefficient}", v.line());

    let octic = cyclic_cover_chern(8, 2)?;
    for v in geography(&octic) {
        println!("{}", v.line());
    }
    for line in classify_horikawa(&octic)?.describe() {
        println!("  {line}");
    }
    println!("{}", classify_horikawa(&cyclic_cover_chern(6, 3)?).unwrap_err());
    Ok(())
}
