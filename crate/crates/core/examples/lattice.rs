//! Intersection numbers and canonical classes on P2 and the Hirzebruch
//! surfaces.

use orbigeo::{base_euler, canonical_class, intersect, BaseSurface, DivisorClass};

fn main() -> orbigeo::Result<()> {
    for s in [BaseSurface::ProjectivePlane, BaseSurface::Hirzebruch(0), BaseSurface::Hirzebruch(2)] {
        let k = canonical_class(s);
        println!("{s}: K = {k}, K^2 = {}, e = {}", intersect(&k, &k)?, base_euler(s));
    }

    // on F2 the negative section is T - 2F
    let t = DivisorClass::hirzebruch(2, 1, 0);
    let f = DivisorClass::hirzebruch(2, 0, 1);
    let neg = t.checked_add(&f.scale(-2))?;
    println!("F2: T.F = {}, (T-2F)^2 = {}", intersect(&t, &f)?, intersect(&neg, &neg)?);

    let mixed = intersect(&DivisorClass::plane(1), &t);
    println!("P2 line against an F2 class: {}", mixed.unwrap_err());
    Ok(())
}
