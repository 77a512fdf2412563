//! Isotropy orders of ADE points of the branch divisor and the Megyesi
//! corrections used when contracting ADE configurations.

use orbigeo::{beta, megyesi_correction, AdeType};

fn main() {
    let rows: [(&str, &[u32]); 9] = [
        ("A1", &[2, 2]),
        ("A1", &[2, 7]),
        ("A2", &[2]),
        ("A3", &[2, 2]),
        ("A11", &[2, 2]),
        ("D4", &[2, 2, 5]),
        ("D6", &[2, 2, 2]),
        ("D5", &[3, 2, 2]),
        ("E7", &[2, 2]),
    ];
    for (name, mults) in rows {
        let t: AdeType = name.parse().expect("valid ADE type");
        match beta(t, mults) {
            Ok(b) => println!("beta({t}; {mults:?}) = {b}"),
            Err(e) => println!("beta({t}; {mults:?}): {e}"),
        }
        if let Some(note) = t.beta_row().index_note(t) {
            println!("  note: {note}");
        }
    }

    // A3 with multiplicities (4,4) is not log terminal
    println!("{}", beta(AdeType::a(3), &[4, 4]).unwrap_err());
    println!("{}", beta(AdeType::e(6), &[2]).unwrap_err());

    for t in [AdeType::a(4), AdeType::d(4), AdeType::e(8)] {
        println!("Megyesi correction for {t}: {}", megyesi_correction(t));
    }
}
