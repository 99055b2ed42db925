use zkernel::arith::primes_between;
use zkernel::invariants::{
    e_sharp_group, sz_lz, z_infty_finite, z_n_group, Context, Degree, ZnQuery,
};
use zkernel::localization::decompose;
use zkernel::scan::{family_members, finiteness_scan, quasi_regular_pairs, Strategy};
use zkernel::{Family, LieGroupId};

fn finite_range(family: Family, params: std::ops::RangeInclusive<u32>) -> Vec<(u32, bool)> {
    let groups = family_members(family, params);
    finiteness_scan(Strategy::Parallel, &groups)
        .into_iter()
        .map(|(g, f)| (g.parameter(), f))
        .collect()
}

#[test]
fn finiteness_boundaries_su_sp_u() {
    for (n, f) in finite_range(Family::SU, 2..=40) {
        assert_eq!(f, n < 8, "SU({n})");
    }
    for (n, f) in finite_range(Family::Sp, 1..=40) {
        assert_eq!(f, n < 14, "Sp({n})");
    }
    for (n, f) in finite_range(Family::U, 2..=20) {
        assert_eq!(f, n < 5, "U({n})");
    }
    for g in LieGroupId::EXCEPTIONAL {
        assert_eq!(z_infty_finite(&g), g != LieGroupId::E6, "{g}");
    }
}

#[test]
fn finiteness_spin() {
    // odd Spin follows Sp; even Spin(2m) picks up extra ghosts through the
    // degree 2m-1 generator whenever 2m-1 is a sum of three degrees 4k-1 or
    // 2m-1 plus two of them lands on a degree
    let infinite: Vec<u32> = finite_range(Family::Spin, 3..=80)
        .into_iter()
        .filter(|&(_, f)| !f)
        .map(|(n, _)| n)
        .collect();
    let below_29: Vec<u32> = infinite.iter().copied().filter(|&n| n < 29).collect();
    assert_eq!(below_29, vec![14, 18, 22, 26]);
    assert!((29..=80).all(|n| infinite.contains(&n)));
    assert!(finite_range(Family::SO, 3..=40)
        .into_iter()
        .zip(finite_range(Family::Spin, 3..=40))
        .all(|(a, b)| a == b));
}

#[test]
fn local_invariants_match_decompositions() {
    let mut groups = family_members(Family::SU, 2..=13);
    groups.extend(family_members(Family::Sp, 1..=12));
    groups.extend(family_members(Family::Spin, 3..=25));
    groups.retain(|g| g.rank() <= 12);
    groups.extend(LieGroupId::EXCEPTIONAL);
    for (g, p) in quasi_regular_pairs(&groups, &primes_between(3, 37)) {
        let r = sz_lz(&g, Context::LocalAt(p)).unwrap();
        let d = decompose(&g, p).unwrap();
        assert_eq!(r.sz, d.max_degree(), "{g} at {p}");
        assert_eq!(r.lz as usize, d.distinct_degree_count(), "{g} at {p}");
        assert!(r.sz >= r.lz);
    }
}

#[test]
fn sz_at_least_lz_everywhere() {
    let mut groups = family_members(Family::SU, 2..=20);
    groups.extend(family_members(Family::U, 2..=20));
    groups.extend(family_members(Family::SO, 3..=30));
    groups.extend(LieGroupId::EXCEPTIONAL);
    for g in groups {
        let r = sz_lz(&g, Context::Rational).unwrap();
        assert!(r.sz >= r.lz, "{g}");
        for p in primes_between(3, 37) {
            if let Ok(r) = sz_lz(&g, Context::LocalAt(p)) {
                assert!(r.sz >= r.lz, "{g} at {p}");
            }
        }
    }
}

#[test]
fn z_n_is_monotone() {
    for name in ["SU3", "Sp2", "G2"] {
        let g: LieGroupId = name.parse().unwrap();
        let mut prev: Option<(u32, u64)> = None;
        for n in 3..=14 {
            let a = z_n_group(&ZnQuery {
                group: g,
                n: Degree::Finite(n),
                selector: None,
            })
            .unwrap();
            let grp = a.abelian().unwrap();
            let cur = (grp.free_rank(), grp.torsion_order());
            if let Some((r, t)) = prev {
                assert!(cur.0 <= r && cur.1 <= t, "{name} n={n}");
            }
            prev = Some(cur);
        }
    }
}

#[test]
fn e_sharp_matches_z_n_at_stability() {
    for (name, from) in [("SU3", 5u32), ("Sp2", 7)] {
        let g: LieGroupId = name.parse().unwrap();
        let mut degrees: Vec<Degree> = (from..from + 10).map(Degree::Finite).collect();
        degrees.push(Degree::Infinity);
        for n in degrees {
            let e = e_sharp_group(&g, n).unwrap();
            let z = z_n_group(&ZnQuery {
                group: g,
                n,
                selector: None,
            })
            .unwrap();
            assert_eq!(e.group, z.group, "{name} n={n}");
        }
    }
}
