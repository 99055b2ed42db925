use zkernel::serre::{
    ghost_obstruction_vanishes, serre_bound, serre_family, serre_pi, sphere_homotopy, SerreFamily,
    SerreQuery,
};

const PRIMES: [u64; 4] = [3, 5, 7, 11];

#[test]
fn only_zero_or_z_p_and_families_disjoint() {
    for p in PRIMES {
        for n in 1..=30u64 {
            for t in 1..serre_bound(p) {
                let q = SerreQuery::new(2 * n + 1, t, p).unwrap();
                let g = serre_pi(&q);
                assert_eq!(g.free_rank(), 0);
                assert!(
                    g.is_trivial() || g.torsion() == [p],
                    "S^{} t={t} p={p}",
                    2 * n + 1
                );
                // both congruences at once would need t + 2 and t + 1 divisible by 2(p-1)
                let step = 2 * (p - 1);
                let even =
                    (t + 2) % step == 0 && (2..p).contains(&((t + 2) / step)) && n < (t + 2) / step;
                let odd = (t + 1) % step == 0 && (1..p).contains(&((t + 1) / step));
                assert!(!(even && odd));
                assert_eq!(g.is_trivial(), !(even || odd));
                match serre_family(&q) {
                    Some(SerreFamily::Even { .. }) => assert!(even),
                    Some(SerreFamily::Odd { .. }) => assert!(odd),
                    None => assert!(!even && !odd),
                }
            }
        }
    }
}

#[test]
fn named_groups_of_s3() {
    for p in PRIMES {
        let pi = |i: u64| serre_pi(&SerreQuery::new(3, i - 3, p).unwrap());
        assert_eq!(pi(4 * p - 3).torsion(), &[p]);
        assert_eq!(pi(2 * p).torsion(), &[p]);
    }
}

/// Independent route: the obstruction group sits in
/// π_{2n+2} --α_1^*--> π_{2n+2p-1}(S^{2m+1}) -> [S^{2n+1} ∪ e^{2n+2p-1}, S^{2m+1}] -> 0,
/// so it vanishes when π_{2n+2p-1}(S^{2m+1}) does, or when α_1^* is onto, which is
/// the case π_{2p}(S^3) -> π_{4p-3}(S^3).
fn obstruction_by_table(n: u64, m: u64, p: u64) -> bool {
    let target = sphere_homotopy(2 * m + 1, 2 * n + 2 * p - 1, p).unwrap();
    target.is_trivial() || (m == 1 && 2 * n + 2 * p - 1 == 4 * p - 3)
}

#[test]
fn ghost_obstruction_agrees_with_the_table() {
    for p in [3u64, 5, 7, 11, 13] {
        for n in 1..p {
            for m in 1..=12u64 {
                if n == m || n + p - 1 == m {
                    assert!(ghost_obstruction_vanishes(n, m, p).is_err());
                    continue;
                }
                assert_eq!(
                    ghost_obstruction_vanishes(n, m, p).unwrap(),
                    obstruction_by_table(n, m, p),
                    "n={n} m={m} p={p}"
                );
            }
        }
    }
}
