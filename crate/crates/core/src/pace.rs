//! PACE-style text formats: `.gr` graph files (`p tw <n> <m>` header, one
//! `u v` line per edge) and `.td` tree-decomposition files (`s td <#bags>
//! <max_bag_size> <n>` header, `b <id> <v...>` bag lines, tree edges).
//! Ids are 1-based on disk, 0-based in memory. Emission is canonical —
//! sorted edges, sorted bag contents — so parse→emit is byte-identical on
//! anything this crate wrote.
//!
//! A `c family ...` comment records the graph family and parameters; the
//! parser uses it to restore subset labels.

use crate::graphs::{FamilyTag, Graph};
use crate::subsets::{binomial, colex_unrank};
use crate::td::TreeDecomposition;
use crate::{Error, Result};
use num::bigint::BigUint;
use std::fmt::Write as _;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Renders a graph as a `.gr` file.
pub fn write_gr(g: &Graph) -> String {
    let mut out = String::new();
    match g.family() {
        FamilyTag::Generic => {}
        FamilyTag::GeneralizedKneser { n, k, t } => {
            writeln!(out, "c family gkneser {n} {k} {t}").unwrap();
        }
        FamilyTag::Johnson { n, k } => {
            writeln!(out, "c family johnson {n} {k}").unwrap();
        }
        FamilyTag::JohnsonComplement { n, k } => {
            writeln!(out, "c family johnson-complement {n} {k}").unwrap();
        }
    }
    writeln!(out, "p tw {} {}", g.n_vertices(), g.n_edges()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Parses a `.gr` file. A recognized `c family` comment restores the family
/// tag and the colex subset labels; other comments are ignored.
pub fn parse_gr(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut family: Option<FamilyTag> = None;
    let mut graph: Option<Graph> = None;
    let mut edges_seen = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("c ") {
            if let Some(tag) = parse_family_comment(rest, lineno)? {
                family = Some(tag);
            }
            continue;
        }
        if line == "c" {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            if header.is_some() {
                return Err(parse_err(lineno, "second p-line"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "tw" {
                return Err(parse_err(lineno, "expected `p tw <vertices> <edges>`"));
            }
            let nv: usize = fields[1]
                .parse()
                .map_err(|_| parse_err(lineno, "bad vertex count"))?;
            let ne: usize = fields[2]
                .parse()
                .map_err(|_| parse_err(lineno, "bad edge count"))?;
            header = Some((nv, ne));
            graph = Some(Graph::new(nv));
            continue;
        }
        // An edge line.
        let Some(g) = graph.as_mut() else {
            return Err(parse_err(lineno, "edge line before the p-line"));
        };
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(parse_err(lineno, "expected `<u> <v>`"));
        };
        let u: usize = a.parse().map_err(|_| parse_err(lineno, "bad endpoint"))?;
        let v: usize = b.parse().map_err(|_| parse_err(lineno, "bad endpoint"))?;
        if u == 0 || v == 0 {
            return Err(parse_err(lineno, "vertex ids are 1-based"));
        }
        g.add_edge(u - 1, v - 1)
            .map_err(|e| parse_err(lineno, e.to_string()))?;
        edges_seen += 1;
    }

    let Some((_, ne)) = header else {
        return Err(parse_err(text.lines().count(), "missing p-line"));
    };
    let mut g = graph.expect("graph allocated with header");
    if edges_seen != ne {
        return Err(parse_err(
            text.lines().count(),
            format!("header promises {ne} edges, found {edges_seen}"),
        ));
    }
    if let Some(tag) = family {
        let (n, k) = match tag {
            FamilyTag::GeneralizedKneser { n, k, .. } => (n, k),
            FamilyTag::Johnson { n, k } | FamilyTag::JohnsonComplement { n, k } => (n, k),
            FamilyTag::Generic => unreachable!(),
        };
        if BigUint::from(g.n_vertices()) != binomial(n.into(), i64::from(k)) {
            return Err(parse_err(
                1,
                format!(
                    "family comment says C({n},{k}) vertices, file has {}",
                    g.n_vertices()
                ),
            ));
        }
        let labels: Result<Vec<_>> = (1..=g.n_vertices() as u64)
            .map(|r| colex_unrank(r, n, k))
            .collect();
        g.set_family(tag, Some(labels?));
    }
    Ok(g)
}

fn parse_family_comment(rest: &str, lineno: usize) -> Result<Option<FamilyTag>> {
    let fields: Vec<&str> = rest.split_whitespace().collect();
    if fields.first() != Some(&"family") {
        return Ok(None);
    }
    let num = |s: &str| -> Result<u32> {
        s.parse()
            .map_err(|_| parse_err(lineno, "bad family parameter"))
    };
    match (fields.get(1), fields.len()) {
        (Some(&"gkneser"), 5) => Ok(Some(FamilyTag::GeneralizedKneser {
            n: num(fields[2])?,
            k: num(fields[3])?,
            t: num(fields[4])?,
        })),
        (Some(&"johnson"), 4) => Ok(Some(FamilyTag::Johnson {
            n: num(fields[2])?,
            k: num(fields[3])?,
        })),
        (Some(&"johnson-complement"), 4) => Ok(Some(FamilyTag::JohnsonComplement {
            n: num(fields[2])?,
            k: num(fields[3])?,
        })),
        _ => Err(parse_err(lineno, "unrecognized family comment")),
    }
}

/// Renders a tree decomposition as a `.td` file.
pub fn write_td(td: &TreeDecomposition) -> String {
    let mut out = String::new();
    let max_bag = td.bags().iter().map(|b| b.len()).max().unwrap_or(0);
    writeln!(
        out,
        "s td {} {} {}",
        td.bags().len(),
        max_bag,
        td.host_vertices()
    )
    .unwrap();
    for (i, bag) in td.bags().iter().enumerate() {
        write!(out, "b {}", i + 1).unwrap();
        for &v in bag {
            write!(out, " {}", v + 1).unwrap();
        }
        out.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        writeln!(out, "{} {}", a + 1, b + 1).unwrap();
    }
    out
}

/// Parses a `.td` file. The header's bag count and max bag size must match
/// the body.
pub fn parse_td(text: &str) -> Result<TreeDecomposition> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<usize>>> = Vec::new();
    let mut tree_edges: Vec<(usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line == "c" || line.starts_with("c ") {
            continue;
        }
        if let Some(rest) = line.strip_prefix("s ") {
            if header.is_some() {
                return Err(parse_err(lineno, "second s-line"));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 4 || fields[0] != "td" {
                return Err(parse_err(
                    lineno,
                    "expected `s td <bags> <max_bag_size> <vertices>`",
                ));
            }
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| parse_err(lineno, "bad s-line field"))
            };
            let nb = parse(fields[1])?;
            header = Some((nb, parse(fields[2])?, parse(fields[3])?));
            bags = vec![None; nb];
            continue;
        }
        if let Some(rest) = line.strip_prefix("b ") {
            let Some((nb, _, nv)) = header else {
                return Err(parse_err(lineno, "bag line before the s-line"));
            };
            let mut it = rest.split_whitespace();
            let id: usize = it
                .next()
                .ok_or_else(|| parse_err(lineno, "bag line without id"))?
                .parse()
                .map_err(|_| parse_err(lineno, "bad bag id"))?;
            if id == 0 || id > nb {
                return Err(parse_err(lineno, format!("bag id {id} outside 1..={nb}")));
            }
            if bags[id - 1].is_some() {
                return Err(parse_err(lineno, format!("bag {id} declared twice")));
            }
            let mut bag = Vec::new();
            for f in it {
                let v: usize = f.parse().map_err(|_| parse_err(lineno, "bad bag vertex"))?;
                if v == 0 || v > nv {
                    return Err(parse_err(
                        lineno,
                        format!("bag vertex {v} outside 1..={nv}"),
                    ));
                }
                bag.push(v - 1);
            }
            bags[id - 1] = Some(bag);
            continue;
        }
        // A tree-edge line.
        if header.is_none() {
            return Err(parse_err(lineno, "edge line before the s-line"));
        }
        let mut it = line.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(parse_err(lineno, "expected `<i> <j>`"));
        };
        let a: usize = a.parse().map_err(|_| parse_err(lineno, "bad node id"))?;
        let b: usize = b.parse().map_err(|_| parse_err(lineno, "bad node id"))?;
        if a == 0 || b == 0 {
            return Err(parse_err(lineno, "node ids are 1-based"));
        }
        tree_edges.push((a - 1, b - 1));
    }

    let last = text.lines().count();
    let Some((nb, max_bag, nv)) = header else {
        return Err(parse_err(last, "missing s-line"));
    };
    let bags: Vec<Vec<usize>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(last, format!("bag {} never declared", i + 1))))
        .collect::<Result<_>>()?;
    if nb == 0 {
        return Err(parse_err(last, "a decomposition needs at least one bag"));
    }
    let actual_max = bags.iter().map(|b| b.len()).max().unwrap_or(0);
    if actual_max != max_bag {
        return Err(parse_err(
            last,
            format!("header says max bag size {max_bag}, body has {actual_max}"),
        ));
    }
    TreeDecomposition::new(bags, tree_edges, nv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_generalized_kneser, build_johnson_complement, ParamTriple};
    use crate::td::build_star_decomposition;
    use proptest::prelude::*;

    #[test]
    fn gr_round_trip_is_byte_identical() {
        let g = build_generalized_kneser(ParamTriple::new(5, 2, 1).unwrap()).unwrap();
        let text = write_gr(&g);
        assert!(text.starts_with("c family gkneser 5 2 1\np tw 10 15\n"));
        let parsed = parse_gr(&text).unwrap();
        assert_eq!(write_gr(&parsed), text);
        assert_eq!(parsed, g);
    }

    #[test]
    fn gr_without_family_comment_stays_generic() {
        let text = "p tw 3 2\n1 2\n2 3\n";
        let g = parse_gr(text).unwrap();
        assert_eq!(g.family(), FamilyTag::Generic);
        assert!(g.labels().is_none());
        assert_eq!(write_gr(&g), text);
    }

    #[test]
    fn gr_parse_errors_carry_line_numbers() {
        let cases = [
            ("p tw 3\n", "p tw"),
            ("p tw 3 1\n1 2\np tw 3 1\n", "second"),
            ("1 2\n", "before the p-line"),
            ("p tw 3 1\n0 2\n", "1-based"),
            ("p tw 3 1\n1 4\n", "outside"),
            ("p tw 3 2\n1 2\n1 2\n", "duplicate"),
            ("p tw 3 2\n1 2\n", "promises 2 edges"),
            ("p tw 3 1\n1 1\n", "self-loop"),
            ("c family gkneser 5 2\np tw 10 0\n", "family"),
            ("c family johnson 5 2\np tw 9 0\n", "C(5,2)"),
        ];
        for (text, needle) in cases {
            let err = parse_gr(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} gave {err}");
        }
    }

    #[test]
    fn empty_graph_gr() {
        let text = "p tw 0 0\n";
        let g = parse_gr(text).unwrap();
        assert_eq!(g.n_vertices(), 0);
        assert_eq!(write_gr(&g), text);
    }

    #[test]
    fn td_round_trip_is_byte_identical() {
        let g = build_johnson_complement(5, 3).unwrap();
        let star = crate::graphs::ekr_star_independent_set(&g).unwrap();
        let td = build_star_decomposition(&g, &star).unwrap();
        let text = write_td(&td);
        let parsed = parse_td(&text).unwrap();
        assert_eq!(write_td(&parsed), text);
        assert_eq!(parsed, td);
    }

    #[test]
    fn td_with_empty_bag_round_trips() {
        let td = TreeDecomposition::new(vec![vec![]], vec![], 0).unwrap();
        let text = write_td(&td);
        assert_eq!(text, "s td 1 0 0\nb 1\n");
        assert_eq!(parse_td(&text).unwrap(), td);
    }

    #[test]
    fn td_parse_errors() {
        let cases = [
            ("b 1 2\n", "before the s-line"),
            ("s td 1 1 2\nb 1 1\nb 1 1\n", "twice"),
            ("s td 2 1 2\nb 1 1\n", "never declared"),
            ("s td 1 1 2\nb 1 3\n", "outside"),
            ("s td 1 2 2\nb 1 1\n", "max bag size"),
            ("s td 2 1 2\nb 1 1\nb 2 2\n", "tree"),
            ("s td 3 1 2\nb 1 1\nb 2 2\nb 3 1\n1 2\n1 2\n", "cycle"),
        ];
        for (text, needle) in cases {
            let err = parse_td(text).unwrap_err().to_string();
            assert!(err.contains(needle), "{text:?} gave {err}");
        }
    }

    proptest! {
        #[test]
        fn random_generic_graphs_round_trip(n in 1usize..12, seed in 0u64..10_000) {
            let mut state = seed | 1;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    if state >> 40 & 1 == 1 {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let text = write_gr(&g);
            let parsed = parse_gr(&text).unwrap();
            prop_assert_eq!(write_gr(&parsed), text);
        }
    }
}
