//! Balanced separators versus treewidth: every graph has a 2/3-separator of
//! order tw + 1. The exhaustive search shows how tight that is on small
//! fixtures.

use kneser_tw::exact::{exact_tw, Budget};
use kneser_tw::graphs::{build_generalized_kneser, build_johnson_complement, Graph, ParamTriple};
use kneser_tw::separators::{check_p_separator, min_p_separator_order, Frac};

fn main() -> kneser_tw::Result<()> {
    let p = Frac::new(2, 3);
    let budget = Budget::default();

    let fixtures: Vec<(&str, Graph)> = vec![
        (
            "Petersen",
            build_generalized_kneser(ParamTriple::new(5, 2, 1)?)?,
        ),
        ("K5", Graph::new(5).complement()),
        ("J(4,2) complement", build_johnson_complement(4, 2)?),
        (
            "C8",
            Graph::from_edges(
                8,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 5),
                    (5, 6),
                    (6, 7),
                    (7, 0),
                ],
            )?,
        ),
    ];

    println!(
        "{:<20} {:>3} {:>10} {:>8}",
        "graph", "tw", "min |X|", "tw + 1"
    );
    for (name, g) in &fixtures {
        let tw = exact_tw(g, &budget)?.exact_value().expect("small fixtures");
        let min_order = min_p_separator_order(g, p)?;
        println!("{name:<20} {tw:>3} {min_order:>10} {:>8}", tw + 1);
        assert!(min_order as i64 <= tw + 1);
    }

    // A concrete check on the Petersen graph: removing five vertices leaves
    // five, so components must stay at most (2/3)*5 = 10/3, i.e. size 3.
    let petersen = &fixtures[0].1;
    let report = check_p_separator(petersen, &[0, 1, 2, 3, 4], p)?;
    println!(
        "\nPetersen minus {{1..5}}: components {:?}, balanced: {}",
        report.component_sizes, report.balanced
    );
    Ok(())
}
