//! Cross-module identity checks and fixtures frozen from independent
//! oracles (colored-partition enumeration, divisor enumeration, and a
//! separate exact convolution implementation).

use gwq_core::{
    colored_partitions, eisenstein, f0_ode, f0_product, fg_closed, fg_recursive, h_sum,
    h_sum_convolution, h_trr, monomial_basis, recognize, trr_boundary_decomposition, verify_all,
    Eisenstein, QSeries, QmPoly, Rat, Recognition, Series, SurfaceParams,
};

use num_traits::{One, Signed};

fn surface(n: u32) -> SurfaceParams {
    SurfaceParams::new(n).unwrap()
}

fn rat(v: i64) -> Rat {
    Rat::new(v.into(), 1.into())
}

fn ints(values: &[i64]) -> QSeries {
    Series::from_coeffs(values.iter().map(|&v| rat(v)).collect())
}

#[test]
fn genus0_routes_agree_to_order_64() {
    for n in 1..=5 {
        let p = surface(n);
        assert_eq!(f0_product(&p, 64), f0_ode(&p, 64), "n={n}");
    }
}

#[test]
fn genus0_fixtures_from_the_partition_oracle() {
    // frozen after computing with colored_partitions and an independent
    // exact-convolution implementation
    assert_eq!(
        f0_product(&surface(1), 8),
        ints(&[1, 12, 90, 520, 2535, 10908, 42614, 153960, 521235])
    );
    assert_eq!(
        f0_product(&surface(2), 8),
        ints(&[1, 24, 324, 3200, 25650, 176256, 1073720, 5930496, 30178575])
    );
    for n in 1..=2u64 {
        let f0 = f0_product(&surface(n as u32), 8);
        for d in 0..=8u64 {
            assert_eq!(
                f0.coeff(d as usize),
                &Rat::from_integer(colored_partitions(d, 12 * n)),
                "n={n} d={d}"
            );
        }
    }
}

#[test]
fn genus1_and_genus2_fixtures() {
    assert_eq!(
        fg_closed(&surface(1), 1, 8),
        ints(&[0, 1, 18, 174, 1232, 7101, 35310, 156662, 634392])
    );
    assert_eq!(
        fg_closed(&surface(2), 2, 8),
        ints(&[0, 0, 1, 36, 672, 8728, 88830, 754992, 5573456])
    );
}

#[test]
fn h_routes_agree_to_order_64_and_match_fixtures() {
    for n in 1..=5 {
        let p = surface(n);
        let a = h_trr(&p, 64);
        let b = h_sum(&p, 64);
        let c = h_sum_convolution(&p, 64);
        assert_eq!(a, b, "n={n}");
        assert_eq!(b, c, "n={n}");
    }
    // frozen from the independent convolution oracle
    let h = h_trr(&surface(1), 6);
    let expected = [
        Rat::new((-1).into(), 12.into()),
        rat(1),
        Rat::new(45.into(), 2.into()),
        Rat::new(650.into(), 3.into()),
        Rat::new(5915.into(), 4.into()),
        rat(8181),
        Rat::new(234377.into(), 6.into()),
    ];
    assert_eq!(h.coeffs(), &expected);
}

#[test]
fn boundary_strata_assemble_h_to_order_32() {
    for n in 1..=5 {
        let p = surface(n);
        let (sc, fc) = trr_boundary_decomposition(&p, 32);
        assert_eq!(&sc + &fc, h_trr(&p, 32), "n={n}");
    }
}

#[test]
fn genus_induction_to_genus_8() {
    for n in 1..=3 {
        let p = surface(n);
        let t_gprime = gwq_core::g_series(32).t_ddt();
        let mut prev = f0_product(&p, 32);
        for g in 1..=8 {
            let closed = fg_closed(&p, g, 32);
            assert_eq!(closed, fg_recursive(&p, g, 32), "n={n} g={g}");
            assert_eq!(closed, &prev * &t_gprime, "n={n} g={g}");
            prev = closed;
        }
    }
}

#[test]
fn coefficients_are_nonnegative_integers() {
    for n in 1..=5 {
        let p = surface(n);
        for g in 0..=8 {
            for c in fg_closed(&p, g, 32).coeffs() {
                assert!(c.is_integer(), "n={n} g={g}: {c}");
                assert!(!c.is_negative(), "n={n} g={g}: {c}");
            }
        }
    }
}

#[test]
fn verify_all_is_clean_for_all_tested_surfaces() {
    for n in 1..=5 {
        for report in verify_all(&surface(n), 4, 32) {
            assert!(report.is_verified(), "{report}");
        }
    }
}

#[test]
fn genus_prefactor_sits_in_weight_4g() {
    // F_g * (eta-type product)^{-1} = (tG')^g is a weight-4g polynomial:
    // ((E4 - E2^2)/288)^g, written out by the binomial theorem.
    let order = 48;
    let c = Rat::new(1.into(), 288.into());
    let expected: [QmPoly; 3] = [
        QmPoly::new(4, [((2, 0, 0), -c.clone()), ((0, 1, 0), c.clone())]).unwrap(),
        QmPoly::new(
            8,
            [
                ((4, 0, 0), c.clone() * c.clone()),
                ((2, 1, 0), rat(-2) * c.clone() * c.clone()),
                ((0, 2, 0), c.clone() * c.clone()),
            ],
        )
        .unwrap(),
        QmPoly::new(
            12,
            [
                ((6, 0, 0), -(c.clone() * c.clone() * c.clone())),
                ((4, 1, 0), rat(3) * c.clone() * c.clone() * c.clone()),
                ((2, 2, 0), rat(-3) * c.clone() * c.clone() * c.clone()),
                ((0, 3, 0), c.clone() * c.clone() * c.clone()),
            ],
        )
        .unwrap(),
    ];
    for n in 1..=2 {
        let p = surface(n);
        let eta_inverse = QSeries::eta_power(12 * n as i64, order);
        for g in 1..=3u32 {
            let stripped = &fg_closed(&p, g, order) * &eta_inverse;
            let got = recognize(&stripped, 4 * g).unwrap();
            assert_eq!(
                got,
                Recognition::Solved(expected[(g - 1) as usize].clone()),
                "n={n} g={g}"
            );
        }
    }
}

#[test]
fn t_gprime_recognition_ties_into_the_ring() {
    let t_gprime = gwq_core::g_series(64).t_ddt();
    let e2 = eisenstein(Eisenstein::E2, 64);
    let e4 = eisenstein(Eisenstein::E4, 64);
    let rhs = (&e4 - &(&e2 * &e2)).scale(&Rat::new(1.into(), 288.into()));
    assert_eq!(t_gprime, rhs);
}

#[test]
fn weight_basis_sizes_are_stable() {
    // basis sizes for weights 0..=12; recognition window sizes depend on these
    let sizes: Vec<usize> = (0..=6)
        .map(|w| monomial_basis(2 * w).unwrap().len())
        .collect();
    assert_eq!(sizes, [1, 1, 2, 3, 4, 5, 7]);
}

#[test]
fn canonical_series_text_is_stable() {
    let h = h_trr(&surface(1), 4);
    assert_eq!(h.to_string(), "-1/12 1 45/2 650/3 5915/4");
    assert_eq!(QSeries::parse_text(&h.to_string()).unwrap(), h);
    assert!(QSeries::one(2).coeff(0).is_one());
    assert!(QSeries::zero(2).is_zero());
}
