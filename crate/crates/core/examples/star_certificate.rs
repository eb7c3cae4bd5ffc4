//! The width-2001 certificate for K(24,3,2), the smallest instance where
//! the t >= 2 treewidth formula applies: 2024 vertices are far beyond exact
//! solving, but the star decomposition over the EKR star achieves the
//! predicted width from above.

use kneser_tw::graphs::{
    build_generalized_kneser, degree_formula, ekr_independence_number, ekr_star_independent_set,
    ParamTriple,
};
use kneser_tw::td::build_star_decomposition;
use kneser_tw::theorems::{threshold_n0, tw_formula_gkneser};
use std::time::Instant;

fn main() -> kneser_tw::Result<()> {
    let (k, t) = (3, 2);
    let n = u32::try_from(threshold_n0(k, t)).unwrap();
    println!("smallest applicable instance for (k,t) = ({k},{t}): n = {n}");

    let start = Instant::now();
    let p = ParamTriple::new(n, k, t)?;
    let g = build_generalized_kneser(p)?;
    println!(
        "built K({n},{k},{t}): {} vertices, {} edges in {:?}",
        g.n_vertices(),
        g.n_edges(),
        start.elapsed()
    );
    println!(
        "degree formula: {}, EKR independence number: {}",
        degree_formula(p),
        ekr_independence_number(p).value
    );

    let star = ekr_star_independent_set(&g).expect("labelled");
    let td = build_star_decomposition(&g, &star)?;
    let valid = td.validate(&g)?.is_valid();
    let verdict = tw_formula_gkneser(p);
    println!(
        "star certificate: width {} (valid: {valid}), formula predicts {}",
        td.width(),
        verdict.predicted_tw
    );
    println!("total {:?}", start.elapsed());
    Ok(())
}
