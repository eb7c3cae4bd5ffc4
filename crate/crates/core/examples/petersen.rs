//! The Petersen graph as the generalized Kneser graph K(5,2,1): build it,
//! solve treewidth exactly, and compare against the closed-form prediction,
//! which is *not* applicable this far below its threshold.

use kneser_tw::exact::{exact_tw, Budget};
use kneser_tw::graphs::{build_generalized_kneser, ekr_star_independent_set, ParamTriple};
use kneser_tw::td::{build_star_decomposition, decomposition_from_elimination_order};
use kneser_tw::theorems::tw_formula_gkneser;

fn main() -> kneser_tw::Result<()> {
    let p = ParamTriple::new(5, 2, 1)?;
    let g = build_generalized_kneser(p)?;
    println!(
        "K(5,2,1): {} vertices, {} edges, {}-regular",
        g.n_vertices(),
        g.n_edges(),
        g.degree(0)
    );

    let solved = exact_tw(&g, &Budget::default())?;
    println!("exact treewidth: {}", solved.upper);

    let order = solved.certificate.expect("exact solve carries an order");
    let td = decomposition_from_elimination_order(&g, &order)?;
    println!(
        "certificate: {} bags, width {}, valid: {:?}",
        td.bags().len(),
        td.width(),
        td.validate(&g)?.is_valid()
    );

    let verdict = tw_formula_gkneser(p);
    println!(
        "formula predicts {} (applicable: {}, needs {})",
        verdict.predicted_tw, verdict.applicable, verdict.threshold_used
    );

    // The star over a maximum independent set gives the generic upper bound
    // max(|V|-α-1, Δ) = 5; one off the true value here.
    let star = ekr_star_independent_set(&g).expect("labelled");
    let star_td = build_star_decomposition(&g, &star)?;
    println!("star-certificate width: {}", star_td.width());
    Ok(())
}
