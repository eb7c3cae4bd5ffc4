//! First families minimize shadows: compare the g-shadow of the first m
//! k-subsets of [n] in colex order against random families of the same size.

use kneser_tw::subsets::{colex_unrank, first_family, min_shadow_size, shadow, SetFamily};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> kneser_tw::Result<()> {
    let (n, k, g) = (8u32, 3u32, 2u32);
    let level = 56u64; // C(8,3)
    let mut rng = ChaCha8Rng::seed_from_u64(20);

    println!("g-shadows of m-element families of {k}-subsets of [{n}], g = {g}:");
    println!(
        "{:>4} {:>8} {:>14} {:>14}",
        "m", "first", "random best", "random worst"
    );
    for m in [1u64, 4, 8, 16, 32] {
        let baseline = min_shadow_size(m, n, k, g)?;
        let mut best = usize::MAX;
        let mut worst = 0usize;
        for _ in 0..300 {
            let picks = sample(&mut rng, level as usize, m as usize);
            let members = picks
                .iter()
                .map(|i| colex_unrank(i as u64 + 1, n, k))
                .collect::<kneser_tw::Result<Vec<_>>>()?;
            let fam = SetFamily::new(n, members)?;
            let size = shadow(&fam, g)?.len();
            best = best.min(size);
            worst = worst.max(size);
        }
        println!("{m:>4} {baseline:>8} {best:>14} {worst:>14}");
        assert!(best as u64 >= baseline);
    }

    let f = first_family(4, 5, 3)?;
    println!("\nfirst 4 members of the 3-subsets of [5] in colex order: {f:?}");
    println!("their 2-shadow: {:?}", shadow(&f, 2)?);
    Ok(())
}
