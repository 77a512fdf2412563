//! Five lines with multiplicity 5: orbifold Chern numbers of the pair,
//! of its degree-5 cover, and of the quintic with ten contracted A4
//! chains, which must agree.

use std::collections::BTreeMap;

use orbigeo::{
    chern_report, cover_multiplicativity, cyclic_cover_chern, megyesi_contract, AdeType, BaseSurface, BranchComponent,
    DivisorClass, OrbifoldConfig, SingularPointSpec,
};

fn main() -> orbigeo::Result<()> {
    let lines: Vec<BranchComponent> =
        (1..=5).map(|i| BranchComponent::new(format!("L{i}"), DivisorClass::plane(1), 5, 0, 4)).collect();
    let mut points = Vec::new();
    for i in 1..=5 {
        for j in i + 1..=5 {
            points.push(SingularPointSpec::new(format!("p{i}{j}"), AdeType::a(1), [format!("L{i}"), format!("L{j}")]));
        }
    }
    let cfg = OrbifoldConfig::new(BaseSurface::ProjectivePlane, lines, points)?;

    let base = chern_report(&cfg)?;
    println!("pair:        c1^2 = {}, c2 = {}", base.c1sq, base.c2);
    let cover = cover_multiplicativity(&cfg, 5)?;
    println!("5-fold cover: c1^2 = {}, c2 = {}, 13c1^2-9c2 = {}", cover.c1sq, cover.c2, cover.jet2);

    let smooth = cyclic_cover_chern(5, 5)?;
    let contracted = megyesi_contract(smooth.c1sq.clone(), smooth.c2.clone(), &BTreeMap::from([(AdeType::a(4), 10)]));
    println!("smooth quintic ({}, {}) with 10 A4 contracted: c2 = {}", smooth.c1sq, smooth.c2, contracted.c2);
    assert_eq!(contracted, cover);
    Ok(())
}
