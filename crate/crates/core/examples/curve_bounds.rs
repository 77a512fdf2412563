//! Orbifold curves, minimal orbifold structures and degree bounds for
//! curves on cyclic covers.

use orbigeo::{
    classify_curve, elliptic_image_obstruction, hirzebruch_cover_bound, minimal_multiplicity, plane_cover_bound,
    plane_cover_verdict, severi_condition_count, OrbCurve,
};

fn main() -> orbigeo::Result<()> {
    for (g, marks) in [(0, vec![2, 3, 6]), (0, vec![2, 2, 2, 2]), (0, vec![2, 3, 7]), (0, vec![5, 5]), (1, vec![])] {
        let c = OrbCurve::new(g, marks.clone())?;
        println!("g = {g}, marks {marks:?}: {:?}", classify_curve(&c)?);
    }

    println!("minimal mark for n = 6, contacts (4, 9): {}", minimal_multiplicity(6, &[4, 9])?);

    for (d, n) in [(5, 5), (6, 2), (6, 3), (8, 2), (10, 2), (12, 3)] {
        println!("cover ({d},{n}): {}", plane_cover_verdict(d, n)?.describe());
    }
    println!("deg K_C >= {} for conics on the (12,3) cover", plane_cover_bound(12, 3, 2)?);
    println!("(6,6) double cover of F1, curve (1,2): bound {}", hirzebruch_cover_bound(1, 6, 6, 2, 1, 2)?);

    println!("{}", elliptic_image_obstruction(5)?.conclusion());
    let s = severi_condition_count(10, &vec![vec![5, 5]; 5], 1)?;
    println!("degree 10, genus 1: {} conditions against {} parameters", s.conditions, s.parameters);
    Ok(())
}
