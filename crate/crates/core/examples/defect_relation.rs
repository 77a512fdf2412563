//! Cartan's truncated defect relation applied to covers of P2, to
//! products of lines and to the log-general-type hypothesis.

use orbigeo::{cartan_contradiction, log_general_type_gate, product_projection_argument, DefectScenario, SpecialFiber};

fn main() -> orbigeo::Result<()> {
    for d in 4..=7 {
        let v = cartan_contradiction(&DefectScenario::plane_cover_family(d)?);
        println!("d = {d}: {}", v.line());
    }
    for line in &cartan_contradiction(&DefectScenario::plane_cover_family(6)?).trace {
        println!("  {line}");
    }

    let g1 = SpecialFiber { name: "G1".into(), marks: vec![2, 2] };
    let p = product_projection_argument(&[2; 5], &[2; 5], &[g1])?;
    println!("{}", p.verdict.line());
    println!("  exceptional locus: {:?}", p.exceptional_locus);

    let gate = log_general_type_gate(2, &[(1, 5); 5])?;
    println!("{} [conjectural: {}]", gate.verdict.line(), gate.conjecturally_degenerate);
    Ok(())
}
