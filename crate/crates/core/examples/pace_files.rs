//! PACE file round trips: write a graph to .gr, parse it back, decompose,
//! write the .td, validate, and confirm emission is byte-identical.

use kneser_tw::exact::{exact_tw, Budget};
use kneser_tw::graphs::build_johnson_complement;
use kneser_tw::pace::{parse_gr, parse_td, write_gr, write_td};
use kneser_tw::td::decomposition_from_elimination_order;

fn main() -> kneser_tw::Result<()> {
    let dir = std::env::temp_dir().join("kneser-tw-example");
    std::fs::create_dir_all(&dir)?;

    let g = build_johnson_complement(5, 3)?;
    let gr_path = dir.join("jc-5-3.gr");
    std::fs::write(&gr_path, write_gr(&g))?;
    println!("wrote {}", gr_path.display());

    let reread = parse_gr(&std::fs::read_to_string(&gr_path)?)?;
    assert_eq!(write_gr(&reread), write_gr(&g), "byte-identical round trip");
    println!(
        "reparsed: {} vertices, {} edges, family {:?}",
        reread.n_vertices(),
        reread.n_edges(),
        reread.family()
    );

    let solved = exact_tw(&reread, &Budget::default())?;
    let td = decomposition_from_elimination_order(&reread, &solved.certificate.unwrap())?;
    let td_path = dir.join("jc-5-3.td");
    std::fs::write(&td_path, write_td(&td))?;
    println!(
        "wrote {} (width {}, valid: {:?})",
        td_path.display(),
        td.width(),
        td.validate(&reread)?.is_valid()
    );

    let td_back = parse_td(&std::fs::read_to_string(&td_path)?)?;
    assert_eq!(
        write_td(&td_back),
        write_td(&td),
        "byte-identical round trip"
    );
    println!("both files re-emit byte-identically");
    Ok(())
}
