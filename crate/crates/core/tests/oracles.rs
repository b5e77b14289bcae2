//! Reference values computed by the brute-force exterior algebra in
//! `common`, frozen here and compared against the library.

mod common;

use spectra_dr::geomodels::{lie_model, product_model, torus_model, LieModelSpec};
use spectra_dr::spectral;
use spectra_dr::truncation::{hypercohomology_all, Window};

const IWASAWA_HODGE: [[usize; 4]; 4] = [[1, 2, 2, 1], [3, 6, 6, 3], [3, 6, 6, 3], [1, 2, 2, 1]];

const IWASAWA_BETTI: [usize; 7] = [1, 4, 8, 10, 8, 4, 1];

/// `ℍ^k([s,t])` for `k = 0..=6`, windows in lexicographic order.
const IWASAWA_WINDOWS: [((i64, i64), [usize; 7]); 10] = [
    ((0, 0), [1, 2, 2, 1, 0, 0, 0]),
    ((0, 1), [1, 5, 8, 7, 3, 0, 0]),
    ((0, 2), [1, 4, 8, 9, 6, 2, 0]),
    ((0, 3), [1, 4, 8, 10, 8, 4, 1]),
    ((1, 1), [0, 3, 6, 6, 3, 0, 0]),
    ((1, 2), [0, 2, 6, 8, 6, 2, 0]),
    ((1, 3), [0, 2, 6, 9, 8, 4, 1]),
    ((2, 2), [0, 0, 3, 6, 6, 3, 0]),
    ((2, 3), [0, 0, 3, 7, 8, 5, 1]),
    ((3, 3), [0, 0, 0, 1, 2, 2, 1]),
];

const TORUS_TIMES_IWASAWA_BETTI: [usize; 9] = [1, 6, 17, 30, 36, 30, 17, 6, 1];

#[test]
fn frozen_values_match_the_oracle() {
    let o = common::Exterior::iwasawa();
    for (p, row) in IWASAWA_HODGE.iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            assert_eq!(o.hodge(p, q), h, "h^{{{p},{q}}}");
        }
    }
    for (k, &b) in IWASAWA_BETTI.iter().enumerate() {
        assert_eq!(o.betti(k), b);
    }
    for ((s, t), dims) in IWASAWA_WINDOWS {
        for (k, &h) in dims.iter().enumerate() {
            assert_eq!(o.hyper(s, t, k as i64), h, "[{s},{t}] k = {k}");
        }
    }
    let p = common::Exterior::torus_times_iwasawa();
    for (k, &b) in TORUS_TIMES_IWASAWA_BETTI.iter().enumerate() {
        assert_eq!(p.betti(k), b);
    }
}

#[test]
fn iwasawa_hodge_diamond() {
    let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
    let e1 = spectral::first_page(m.base());
    for (p, row) in IWASAWA_HODGE.iter().enumerate() {
        for (q, &h) in row.iter().enumerate() {
            assert_eq!(e1.dim(p as i64, q as i64), h);
        }
    }
}

#[test]
fn iwasawa_betti_and_windows() {
    let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
    let total = m.base().total();
    for (k, &b) in IWASAWA_BETTI.iter().enumerate() {
        assert_eq!(total.betti(k as i64), b);
    }
    for ((s, t), dims) in IWASAWA_WINDOWS {
        let h = hypercohomology_all(m.base(), Window::new(s, t));
        for (k, &d) in dims.iter().enumerate() {
            assert_eq!(
                h.get(&(k as i64)).copied().unwrap_or(0),
                d,
                "[{s},{t}] k = {k}"
            );
        }
    }
}

#[test]
fn iwasawa_e2_degenerates_but_e1_does_not() {
    let m = lie_model(&LieModelSpec::iwasawa()).unwrap();
    let pages = spectral::pages(m.base());
    assert!(!pages[0].has_zero_differentials());
    let limit = spectral::limit_page(m.base());
    for (k, &b) in IWASAWA_BETTI.iter().enumerate() {
        assert_eq!(limit.diagonal_dim(k as i64), b);
        assert_eq!(pages[1].diagonal_dim(k as i64), b);
    }
}

#[test]
fn product_of_torus_and_iwasawa() {
    let t1 = torus_model(1, 1).unwrap();
    let iw = lie_model(&LieModelSpec::iwasawa()).unwrap();
    let total = product_model(&t1, &iw).unwrap().base().total();
    for (k, &b) in TORUS_TIMES_IWASAWA_BETTI.iter().enumerate() {
        assert_eq!(total.betti(k as i64), b);
    }
}

#[test]
fn torus_windows_are_direct_sums() {
    for n in 1..=3usize {
        let m = torus_model(n, 1).unwrap();
        let n = n as i64;
        for s in 0..=n {
            for t in s..=n {
                let h = hypercohomology_all(m.base(), Window::new(s, t));
                for k in 0..=2 * n {
                    assert_eq!(
                        h.get(&k).copied().unwrap_or(0) as i64,
                        common::torus_hyper(n, s, t, k)
                    );
                }
            }
        }
    }
}
