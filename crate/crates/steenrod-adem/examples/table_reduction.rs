//! Table reduction of Barratt–Eccles chains to surjections.

use steenrod_adem::operads::{surj_boundary_sum, table_reduction};
use steenrod_adem::perm::Group;
use steenrod_adem::simplicial::{Simplex, SpaceModel};

fn main() -> steenrod_adem::Result<()> {
    let s3 = Group::symmetric(3)?;
    let names = ["123", "213", "231"];
    let verts = names
        .iter()
        .map(|n| s3.element_by_name(n))
        .collect::<Result<Vec<_>, _>>()?;
    let x = Simplex::Seq(verts);
    let tr = table_reduction(&s3, &x)?;
    println!("TR({}) =", names.join(", "));
    for s in &tr {
        println!("  {:?}", s.values());
    }

    let model = SpaceModel::EGroup {
        group: s3.clone(),
        truncation: usize::MAX,
    };
    let mut lhs = steenrod_adem::f2::FormalSum::zero();
    for face in &model.boundary_simplex(&x) {
        lhs.add_sum(table_reduction(&s3, face)?);
    }
    println!("TR∂ = ∂TR: {}", lhs == surj_boundary_sum(&tr));
    Ok(())
}
