use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zkernel::psi::{ElementOrder, PsiElement, PsiParams, SubgroupName};

const PARAMS: [(u64, u64); 4] = [(12, 1), (120, 12), (2, 1), (24, 7)];

fn random_element(p: &PsiParams, rng: &mut ChaCha8Rng) -> PsiElement {
    p.element(
        rng.gen_range(-1000..=1000),
        rng.gen_range(-1000..=1000),
        rng.gen_range(0..p.m() as i64),
    )
}

fn small_box(p: &PsiParams) -> Vec<PsiElement> {
    let mut out = Vec::new();
    for a in -2..=2 {
        for b in -2..=2 {
            for c in -2..=2 {
                out.push(p.element(a, b, c));
            }
        }
    }
    out
}

#[test]
fn associativity_random_and_exhaustive() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        for _ in 0..10_000 {
            let (g, h, k) = (
                random_element(&p, &mut rng),
                random_element(&p, &mut rng),
                random_element(&p, &mut rng),
            );
            assert_eq!(p.mul(&p.mul(&g, &h), &k), p.mul(&g, &p.mul(&h, &k)));
        }
        let elems = small_box(&p);
        for g in &elems {
            for h in &elems {
                let gh = p.mul(g, h);
                for k in &elems {
                    assert_eq!(p.mul(&gh, k), p.mul(g, &p.mul(h, k)));
                }
            }
        }
    }
}

#[test]
fn presentation_relations() {
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        let (x, y, z) = (p.x(), p.y(), p.z());
        assert_eq!(p.mul(&x, &z), p.mul(&z, &x));
        assert_eq!(p.mul(&y, &z), p.mul(&z, &y));
        let mut acc = p.identity();
        for _ in 0..m {
            acc = p.mul(&acc, &z);
        }
        assert!(acc.is_identity());
        assert_eq!(p.commutator(&x, &y), p.pow(&z, n));
    }
}

#[test]
fn commutators_are_central() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        for _ in 0..5_000 {
            let g = random_element(&p, &mut rng);
            let h = random_element(&p, &mut rng);
            let k = random_element(&p, &mut rng);
            let c = p.commutator(&h, &k);
            assert_eq!((c.a, c.b), (0, 0));
            assert!(p.center_contains(&c));
            assert!(p.commutator(&g, &c).is_identity());
        }
    }
}

#[test]
fn torsion_subgroup_is_exactly_z() {
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        let torsion = p.subgroup(SubgroupName::Z);
        let finite: Vec<PsiElement> = (0..m as i64)
            .map(|c| p.element(0, 0, c))
            .filter(|g| matches!(p.order(g), ElementOrder::Finite(_)))
            .collect();
        assert_eq!(finite.len() as u64, m);
        assert!(finite.iter().all(|g| torsion.contains(g)));
        // orders agree with repeated multiplication
        for g in &finite {
            let ElementOrder::Finite(k) = p.order(g) else {
                unreachable!()
            };
            let first = (1..=m).find(|&j| p.pow(g, j).is_identity()).unwrap();
            assert_eq!(first, k);
        }
        for g in small_box(&p) {
            let infinite = g.a != 0 || g.b != 0;
            assert_eq!(p.order(&g) == ElementOrder::Infinite, infinite);
        }
    }
}

#[test]
fn center_matches_commuting_with_generators() {
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        for g in small_box(&p) {
            let commutes =
                p.mul(&g, &p.x()) == p.mul(&p.x(), &g) && p.mul(&g, &p.y()) == p.mul(&p.y(), &g);
            assert_eq!(p.center_contains(&g), commutes, "{g} in {p}");
        }
    }
}

#[test]
fn xz_subgroup_closed_and_abelian() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (m, n) in PARAMS {
        let p = PsiParams::new(m, n).unwrap();
        let xz = p.subgroup(SubgroupName::XZ);
        for _ in 0..2_000 {
            let g = p.element(rng.gen_range(-50..50), 0, rng.gen_range(0..m as i64));
            let h = p.element(rng.gen_range(-50..50), 0, rng.gen_range(0..m as i64));
            assert!(xz.contains(&p.mul(&g, &h)));
            assert!(xz.contains(&p.inv(&g)));
            assert_eq!(p.mul(&g, &h), p.mul(&h, &g));
        }
    }
}

fn word_strategy() -> impl Strategy<Value = String> {
    proptest::collection::vec(
        prop::sample::select(vec!['x', 'y', 'z', 'X', 'Y', 'Z']),
        0..=8,
    )
    .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn words_reduce_independently_of_association(w in word_strategy(), split in 0usize..=8, pi in 0usize..4) {
        let (m, n) = PARAMS[pi];
        let p = PsiParams::new(m, n).unwrap();
        let cut = split.min(w.len());
        let (l, r) = w.split_at(cut);
        let whole = p.eval_word(&w).unwrap();
        let parts = p.mul(&p.eval_word(l).unwrap(), &p.eval_word(r).unwrap());
        prop_assert_eq!(whole, parts);
        // right-to-left folding
        let rtl = w.chars().rev().fold(p.identity(), |acc, ch| {
            p.mul(&p.eval_word(&ch.to_string()).unwrap(), &acc)
        });
        prop_assert_eq!(whole, rtl);
    }

    #[test]
    fn inverse_is_two_sided(a in -10_000i64..10_000, b in -10_000i64..10_000, c in 0i64..120, pi in 0usize..4) {
        let (m, n) = PARAMS[pi];
        let p = PsiParams::new(m, n).unwrap();
        let g = p.element(a, b, c);
        prop_assert!(p.mul(&g, &p.inv(&g)).is_identity());
        prop_assert!(p.mul(&p.inv(&g), &g).is_identity());
    }
}

#[test]
fn identity_is_neutral() {
    let p = PsiParams::new(120, 12).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let g = random_element(&p, &mut rng);
        assert_eq!(p.mul(&p.identity(), &g), g);
        assert_eq!(p.mul(&g, &p.identity()), g);
    }
}
