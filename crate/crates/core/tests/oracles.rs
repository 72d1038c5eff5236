//! Independent brute-force computations compared against the library.

mod oracle;

use std::collections::BTreeSet;

use measring::audit::sweep_spaces;
use measring::ideal::annihilator;
use measring::quotient::SpaceMorphism;
use measring::sample::Sample;
use measring::spectrum::spaces_homeomorphic;
use measring::{GroundSet, MeasurableFn, MeasurableSpace, Rational, SigmaAlgebra, Subset};
use oracle::{bell, closure_oracle, homeomorphic_by_search, partition_algebras, restricted_growth_strings};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn generation_matches_closure_on_random_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC105);
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let k = rng.gen_range(0..=4);
        let masks: Vec<u64> = (0..k).map(|_| rng.gen_range(0..1u64 << n)).collect();
        let ground = GroundSet::new(n).unwrap();
        let gens: Vec<Subset> = masks.iter().map(|&m| Subset::from_bits(n, m).unwrap()).collect();
        let algebra = SigmaAlgebra::generate(&ground, &gens).unwrap();
        let got: BTreeSet<u64> = algebra.sets().iter().map(Subset::bits).collect();
        assert_eq!(got, closure_oracle(n, &masks), "generators {masks:?} on {n} points");
    }
}

#[test]
fn atom_size_criterion_matches_bijection_search() {
    let spaces = sweep_spaces(5).unwrap();
    let mut agreeing = 0;
    for (nx, x) in &spaces {
        for (ny, y) in &spaces {
            let decided = spaces_homeomorphic(x, y).unwrap();
            assert_eq!(decided.exists(), homeomorphic_by_search(x, y), "{nx} vs {ny}");
            agreeing += 1;
        }
    }
    assert_eq!(agreeing, 75 * 75);
}

#[test]
fn homeomorphism_witnesses_are_homeomorphisms() {
    let spaces = sweep_spaces(4).unwrap();
    for (_, x) in &spaces {
        for (_, y) in &spaces {
            if let measring::spectrum::Homeomorphism::Yes(m) = spaces_homeomorphic(x, y).unwrap() {
                let again = SpaceMorphism::new(x, y, m.map().to_vec()).unwrap();
                assert!(again.is_homeomorphism());
            }
        }
    }
}

#[test]
fn sweep_counts_are_bell_numbers() {
    let spaces = sweep_spaces(5).unwrap();
    for n in 1..=5 {
        let of_size: Vec<_> = spaces.iter().filter(|(_, s)| s.ground().size() == n).collect();
        assert_eq!(of_size.len(), bell(n), "n = {n}");
        let swept: BTreeSet<Vec<u64>> = of_size
            .iter()
            .map(|(_, s)| {
                let mut m: Vec<u64> = s.sets().iter().map(Subset::bits).collect();
                m.sort_unstable();
                m
            })
            .collect();
        assert_eq!(swept.len(), of_size.len());
        assert_eq!(swept, partition_algebras(n));
    }
    assert_eq!((1..=5).map(bell).collect::<Vec<_>>(), vec![1, 2, 5, 15, 52]);
    for n in 1..=5 {
        assert_eq!(restricted_growth_strings(n).len(), bell(n));
    }
}

#[test]
fn annihilators_match_products() {
    for (name, space) in sweep_spaces(4).unwrap() {
        let sample = Sample::patterns_only(&space).unwrap();
        for f in sample.functions() {
            let ann = annihilator(f);
            for g in sample.functions() {
                let kills = f.mul(g).unwrap().is_zero();
                assert_eq!(ann.contains(g), kills, "{name}: {} · {}", f.render(), g.render());
            }
        }
    }
}

/// `f` is measurable iff every level set is a member.
fn measurable_by_level_sets(space: &MeasurableSpace, values: &[i64]) -> bool {
    let n = values.len();
    values.iter().all(|v| {
        let level = Subset::from_points(n, (0..n).filter(|&p| values[p] == *v));
        space.contains(&level)
    })
}

#[test]
fn measurability_matches_level_sets() {
    for (name, space) in sweep_spaces(4).unwrap() {
        let n = space.ground().size();
        for code in 0..3usize.pow(n as u32) {
            let values: Vec<i64> = (0..n).map(|p| ((code / 3usize.pow(p as u32)) % 3) as i64 - 1).collect();
            let accepted = MeasurableFn::new(&space, values.iter().map(|&v| Rational::integer(v)).collect()).is_ok();
            assert_eq!(accepted, measurable_by_level_sets(&space, &values), "{name}: {values:?}");
        }
    }
}
