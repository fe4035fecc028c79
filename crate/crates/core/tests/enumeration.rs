use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use lattice_walks::algebra::IntPoly;
use lattice_walks::closed_forms::{a2_gf_coeff, chung_feller_poly, solve_king_system};
use lattice_walks::enumerate::{diagonal_polys_2d, endpoint_poly_3d, table_2d, DpStat};
use lattice_walks::moments::{a2_moment_check, moment_report};
use lattice_walks::walk::{Oracle, Region3, Stat, Step2, StepSet2, StepSet3};

fn step_set() -> impl Strategy<Value = StepSet2> {
    prop::collection::btree_set(
        (0u32..=2, 0u32..=2).prop_filter("zero", |&(a, b)| a + b > 0),
        1..=4,
    )
    .prop_map(|set| {
        StepSet2::new(set.into_iter().map(|(a, b)| Step2::new([a, b]).unwrap())).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn dp_matches_oracle(s in step_set(), a in 0u64..=5, b in 0u64..=5, losing in any::<bool>()) {
        let stat = if losing { DpStat::LosingTimes } else { DpStat::BreakEvens };
        let table = table_2d(&s, a, b, stat);
        let brute = Oracle::default().endpoint_poly(&s, (a, b), stat.into()).unwrap();
        prop_assert_eq!(&table[a as usize][b as usize], &brute);
    }

    #[test]
    fn diagonal_is_the_table_diagonal(s in step_set(), n in 0u64..=8) {
        let table = table_2d(&s, n, n, DpStat::LosingTimes);
        let diag = diagonal_polys_2d(&s, n, DpStat::LosingTimes);
        for k in 0..=n as usize {
            prop_assert_eq!(&diag[k], &table[k][k]);
        }
    }
}

#[test]
fn chung_feller_through_thirty() {
    let diag = diagonal_polys_2d(&StepSet2::up_right(), 30, DpStat::LosingTimes);
    for (n, p) in diag.iter().enumerate() {
        assert_eq!(*p, chung_feller_poly(n as u64), "n = {n}");
    }
}

#[test]
fn losing_time_moments_through_thirty() {
    let diag = diagonal_polys_2d(&StepSet2::up_right(), 30, DpStat::LosingTimes);
    for n in 1..=30i64 {
        let r = moment_report(&diag[n as usize], 2).unwrap();
        assert_eq!(r.mean, BigRational::from_integer(n.into()));
        assert_eq!(
            r.variance,
            BigRational::new((n * n + 2 * n).into(), 3.into())
        );
    }
}

#[test]
fn break_even_moments_through_thirty() {
    let diag = diagonal_polys_2d(&StepSet2::up_right(), 30, DpStat::BreakEvens);
    for n in 1..=30u64 {
        let r = moment_report(&diag[n as usize], 2).unwrap();
        assert_eq!((r.mean, r.variance), a2_moment_check(n), "n = {n}");
    }
}

#[test]
fn break_even_gf_through_twenty() {
    let diag = diagonal_polys_2d(&StepSet2::up_right(), 20, DpStat::BreakEvens);
    for (n, p) in diag.iter().enumerate() {
        assert_eq!(a2_gf_coeff(n, 20).unwrap(), *p);
    }
}

#[test]
fn king_system_against_dp() {
    let sys = solve_king_system(10).unwrap();
    let diag = diagonal_polys_2d(&StepSet2::king(), 10, DpStat::LosingTimes);
    for (n, p) in diag.iter().enumerate() {
        assert_eq!(sys.king.coeff(n).to_integer().as_ref(), Some(p), "n = {n}");
    }
    // brute-force counts are the central Delannoy numbers
    let oracle = Oracle::default();
    let counts: Vec<BigInt> = (0..=6)
        .map(|n| {
            oracle
                .endpoint_poly(&StepSet2::king(), (n, n), Stat::A1)
                .unwrap()
                .sum()
        })
        .collect();
    let delannoy: Vec<BigInt> = [1, 3, 13, 63, 321, 1683, 8989]
        .iter()
        .map(|&c| BigInt::from(c))
        .collect();
    assert_eq!(counts, delannoy);
}

#[test]
fn three_d_regions_partition_the_steps() {
    // every point lies in exactly one region, so the visit counts over all
    // seven regions add up to the walk length
    let s = StepSet3::unit();
    for end in [[1u64, 2, 1], [2, 2, 2], [3, 1, 2], [3, 3, 3]] {
        let len: u64 = end.iter().sum();
        let polys: Vec<IntPoly> = Region3::ALL
            .iter()
            .map(|&r| endpoint_poly_3d(&s, end, r))
            .collect();
        let mass = polys[0].sum();
        assert!(polys.iter().all(|p| p.sum() == mass));
        let visits: BigInt = polys.iter().map(|p| p.derivative().sum()).sum();
        assert_eq!(visits, mass * BigInt::from(len));
    }
}

#[test]
fn three_d_matches_oracle() {
    let s = StepSet3::unit();
    let oracle = Oracle::default();
    for r in Region3::ALL {
        for end in [[1u64, 1, 1], [2, 1, 0], [2, 2, 2], [3, 2, 1], [3, 3, 3]] {
            assert_eq!(
                endpoint_poly_3d(&s, end, r),
                oracle.endpoint_poly_3d(&s, end, r).unwrap()
            );
        }
    }
}
