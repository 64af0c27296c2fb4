use proptest::prelude::*;

use limcom_core::fincat::{
    connected_components, has_span_cocones, is_conical, is_filtered, is_sifted, opposite_category, preset,
    product_category, SAMPLE_PRESETS,
};
use limcom_core::setfun::{colimit, comparison_report, limit};
use limcom_core::{BiFunctor, Caps, FinCategory, SetFunctor};

/// A functor on `chain:n` from one arbitrary map per step.
fn chain_functor(carriers: &[usize], steps: &[Vec<usize>]) -> SetFunctor {
    let n = carriers.len();
    let c = preset(&format!("chain:{n}")).unwrap();
    let mut action = vec![Vec::new(); c.morphism_count()];
    for i in 0..n {
        for j in i..n {
            let mut t: Vec<usize> = (0..carriers[i]).collect();
            for step in &steps[i..j] {
                t = t.iter().map(|&x| step[x]).collect();
            }
            action[c.hom(i, j)[0]] = t;
        }
    }
    SetFunctor::new(c, carriers.to_vec(), action).unwrap()
}

fn arb_chain_functor() -> impl Strategy<Value = SetFunctor> {
    prop::collection::vec(1usize..4, 1..5).prop_flat_map(|carriers| {
        let steps: Vec<_> = carriers
            .windows(2)
            .map(|w| prop::collection::vec(0..w[1], w[0]))
            .collect();
        (Just(carriers), steps).prop_map(|(c, s)| chain_functor(&c, &s))
    })
}

/// A functor on `parallel_pair` or `span` from its two non-identity arrows.
fn arb_two_arrow_functor() -> impl Strategy<Value = SetFunctor> {
    (prop::bool::ANY, 0usize..4, 0usize..4, 0usize..4).prop_flat_map(|(is_span, a, b, c)| {
        let (b, c) = (b.max(1), c.max(1));
        let (f, g) = if is_span {
            (prop::collection::vec(0..b, a), prop::collection::vec(0..c, a))
        } else {
            (prop::collection::vec(0..b, a), prop::collection::vec(0..b, a))
        };
        (Just((is_span, a, b, c)), f, g).prop_map(|((is_span, a, b, c), f, g)| {
            if is_span {
                let cat = preset("span").unwrap();
                let action = vec![(0..a).collect(), (0..b).collect(), (0..c).collect(), f, g];
                SetFunctor::new(cat, vec![a, b, c], action).unwrap()
            } else {
                let cat = preset("parallel_pair").unwrap();
                let action = vec![(0..a).collect(), (0..b).collect(), f, g];
                SetFunctor::new(cat, vec![a, b], action).unwrap()
            }
        })
    })
}

fn arb_functor() -> impl Strategy<Value = SetFunctor> {
    prop_oneof![arb_chain_functor(), arb_two_arrow_functor()]
}

/// Exhaustive count of compatible families.
fn brute_limit_size(f: &SetFunctor) -> usize {
    let c = f.domain();
    let mut count = 0;
    let total: usize = f.carriers().iter().product();
    'tuples: for code in 0..total {
        let mut rest = code;
        let t: Vec<usize> = f
            .carriers()
            .iter()
            .map(|&n| {
                let x = rest % n;
                rest /= n;
                x
            })
            .collect();
        for m in c.morphisms() {
            if f.apply(m, t[c.src(m)]) != t[c.dst(m)] {
                continue 'tuples;
            }
        }
        count += 1;
    }
    if f.carriers().contains(&0) {
        0
    } else {
        count
    }
}

/// The action of `c_m × c_n` on blocks `Z_a × Z_b` with `a | m`, `b | n`.
fn block_bifunctor(m: usize, n: usize, blocks: &[(usize, usize)]) -> BiFunctor {
    let (gm, gn) = (preset(&format!("group:c{m}")).unwrap(), preset(&format!("group:c{n}")).unwrap());
    let mut points = Vec::new();
    for (k, &(a, b)) in blocks.iter().enumerate() {
        for x in 0..a {
            for y in 0..b {
                points.push((k, x, y));
            }
        }
    }
    let index = |p: (usize, usize, usize)| points.iter().position(|&q| q == p).unwrap();
    let mut action = Vec::new();
    for s in 0..m {
        for t in 0..n {
            action.push(
                points
                    .iter()
                    .map(|&(k, x, y)| {
                        let (a, b) = blocks[k];
                        index((k, (x + s) % a, (y + t) % b))
                    })
                    .collect(),
            );
        }
    }
    BiFunctor::new(&gm, &gn, vec![points.len()], action, &Caps::default()).unwrap()
}

fn divisors(n: usize) -> Vec<usize> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

proptest! {
    #[test]
    fn limit_matches_exhaustive_search(f in arb_functor()) {
        let lim = limit(&f, 1_000_000).unwrap();
        prop_assert_eq!(lim.len(), brute_limit_size(&f));
        prop_assert!(lim.len() <= f.carriers().iter().product::<usize>());
        prop_assert!(lim.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn colimit_is_bounded_and_additive(f in arb_functor(), g in arb_functor()) {
        let cf = colimit(&f);
        prop_assert!(cf.len() <= f.carriers().iter().sum::<usize>());
        if f.domain() == g.domain() {
            let sum = f.coproduct(&g).unwrap();
            prop_assert_eq!(colimit(&sum).len(), cf.len() + colimit(&g).len());
            prop_assert_eq!(limit(&sum, 1_000_000).unwrap().len() >= limit(&f, 1_000_000).unwrap().len(), true);
        }
    }

    #[test]
    fn colimit_over_cyclic_group_counts_orbits(n in 1usize..9, cycles in prop::collection::vec(0usize..8, 0..5)) {
        // a permutation built from cycles whose lengths divide n
        let ds = divisors(n);
        let lens: Vec<usize> = cycles.iter().map(|&k| ds[k % ds.len()]).collect();
        let size: usize = lens.iter().sum();
        let mut sigma = vec![0; size];
        let mut start = 0;
        for &l in &lens {
            for k in 0..l {
                sigma[start + k] = start + (k + 1) % l;
            }
            start += l;
        }
        let mut action = vec![(0..size).collect::<Vec<_>>()];
        for _ in 1..n {
            let prev = action.last().unwrap().clone();
            action.push(prev.iter().map(|&x| sigma[x]).collect());
        }
        let c = preset(&format!("group:c{n}")).unwrap();
        let f = SetFunctor::new(c, vec![size], action).unwrap();
        prop_assert_eq!(colimit(&f).len(), lens.len());
        prop_assert_eq!(limit(&f, 1_000_000).unwrap().len(), lens.iter().filter(|&&l| l == 1).count());
    }

    #[test]
    fn coprime_block_actions_commute(
        (m, n) in prop::sample::select(vec![(2usize, 3usize), (3, 2), (2, 5), (4, 3), (3, 4), (5, 6)]),
        picks in prop::collection::vec((0usize..6, 0usize..6), 1..4),
    ) {
        let (dm, dn) = (divisors(m), divisors(n));
        let blocks: Vec<(usize, usize)> = picks.iter().map(|&(a, b)| (dm[a % dm.len()], dn[b % dn.len()])).collect();
        let r = comparison_report(&block_bifunctor(m, n, &blocks), &Caps::default()).unwrap();
        prop_assert!(r.bijective);
    }

    #[test]
    fn product_counts_multiply(a in prop::sample::select(SAMPLE_PRESETS), b in prop::sample::select(SAMPLE_PRESETS)) {
        let (x, y) = (preset(a).unwrap(), preset(b).unwrap());
        let p = product_category(&x, &y, 200_000).unwrap();
        prop_assert_eq!(p.category.object_count(), x.object_count() * y.object_count());
        prop_assert_eq!(p.category.morphism_count(), x.morphism_count() * y.morphism_count());
    }
}

#[test]
fn shared_cyclic_factor_breaks_bijectivity() {
    // C2 acting diagonally on two points
    let b = block_bifunctor(2, 2, &[(2, 1), (1, 2)]);
    assert!(comparison_report(&b, &Caps::default()).unwrap().bijective);
    let diag = BiFunctor::new(
        &preset("group:c2").unwrap(),
        &preset("group:c2").unwrap(),
        vec![2],
        vec![vec![0, 1], vec![1, 0], vec![1, 0], vec![0, 1]],
        &Caps::default(),
    )
    .unwrap();
    assert!(!comparison_report(&diag, &Caps::default()).unwrap().bijective);
}

#[test]
fn opposite_is_an_involution() {
    for name in SAMPLE_PRESETS {
        let c = preset(name).unwrap();
        assert_eq!(opposite_category(&opposite_category(&c)), c, "{name}");
    }
}

#[test]
fn filtered_implies_sifted_implies_span_cocones() {
    let caps = Caps::default();
    for name in SAMPLE_PRESETS {
        let c = preset(name).unwrap();
        if c.is_empty() || connected_components(&c).len() != 1 {
            continue;
        }
        let sifted = is_sifted(&c, &caps).unwrap();
        if is_filtered(&c) {
            assert!(sifted, "{name} is filtered but not sifted");
        }
        if sifted {
            assert!(has_span_cocones(&c), "{name} is sifted without span cocones");
        }
    }
}

/// Tries every choice of legs `v → x`, one per object.
fn brute_conical(c: &FinCategory) -> bool {
    c.objects().any(|v| {
        let homs: Vec<&[usize]> = c.objects().map(|x| c.hom(v, x)).collect();
        if homs.iter().any(|h| h.is_empty()) {
            return false;
        }
        let total: usize = homs.iter().map(|h| h.len()).product();
        (0..total).any(|code| {
            let mut rest = code;
            let legs: Vec<usize> = homs
                .iter()
                .map(|h| {
                    let k = rest % h.len();
                    rest /= h.len();
                    h[k]
                })
                .collect();
            c.morphisms().all(|f| c.compose(f, legs[c.src(f)]) == Some(legs[c.dst(f)]))
        })
    })
}

#[test]
fn conical_matches_brute_force() {
    let caps = Caps::default();
    for name in SAMPLE_PRESETS.iter().copied().chain(["chain:6", "discrete:2", "jk:2:4"]) {
        let c = preset(name).unwrap();
        assert_eq!(is_conical(&c, &caps).unwrap(), brute_conical(&c), "{name}");
    }
}
