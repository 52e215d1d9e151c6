use fockcanon::lct::{frft_transform, hermite_gaussian, lct_composition_sign, lct_transform, LineGrid};
use fockcanon::{Complex64, RealMatrix2, SampledRealFunction, Sign};

fn hg(n: usize) -> SampledRealFunction {
    LineGrid::default()
        .template()
        .unwrap()
        .resample(hermite_gaussian(n).unwrap())
        .unwrap()
}

fn max_diff(a: &SampledRealFunction, b: &SampledRealFunction, k: Complex64) -> f64 {
    a.values()
        .iter()
        .zip(b.values())
        .map(|(x, y)| (x - k * y).norm())
        .fold(0.0, f64::max)
}

fn sup(f: &SampledRealFunction) -> f64 {
    f.values().iter().map(|v| v.norm()).fold(0.0, f64::max)
}

fn families() -> [RealMatrix2; 4] {
    [
        RealMatrix2::rotation(0.4),
        RealMatrix2::dilation(1.3),
        RealMatrix2::fresnel(0.7),
        RealMatrix2::chirp(0.6),
    ]
}

#[test]
fn lct_preserves_norms() {
    for n in 0..=4 {
        let f = hg(n);
        for a in families() {
            let g = lct_transform(&a, &f).unwrap();
            let rel = (g.norm_sq().sqrt() - f.norm_sq().sqrt()).abs() / f.norm_sq().sqrt();
            assert!(rel <= 1e-5, "n={n} A={a:?}: {rel:e}");
        }
    }
}

#[test]
fn composition_sign_is_realized() {
    let pairs = [
        (RealMatrix2::rotation(2.0), RealMatrix2::rotation(2.0)),
        (RealMatrix2::rotation(1.2), RealMatrix2::rotation(0.9)),
        (RealMatrix2::rotation(-2.5), RealMatrix2::rotation(-1.0)),
        (RealMatrix2::new(-1.0, 0.0, 0.4, -1.0), RealMatrix2::chirp(0.3)),
        (RealMatrix2::new(-1.0, 0.0, 0.4, -1.0), RealMatrix2::rotation(0.7)),
        (RealMatrix2::chirp(0.6), RealMatrix2::dilation(1.5)),
        (RealMatrix2::dilation(0.8), RealMatrix2::chirp(-0.4)),
    ];
    let f = hg(3);
    let scale = sup(&f);
    let mut minus = 0;
    for (a1, a2) in pairs {
        let lhs = lct_transform(&a1, &lct_transform(&a2, &f).unwrap()).unwrap();
        let rhs = lct_transform(&a1.mul(&a2), &f).unwrap();
        let sign = lct_composition_sign(&a1, &a2).unwrap();
        minus += (sign == Sign::Minus) as usize;
        let r = max_diff(&lhs, &rhs, sign.complex()) / scale;
        let wrong = max_diff(&lhs, &rhs, -sign.complex()) / scale;
        assert!(r <= 1e-5, "{a1:?} {a2:?}: residual {r:e}");
        assert!(wrong > 1e-2, "{a1:?} {a2:?}: opposite sign also fits");
    }
    // the pairs exercise both signs
    assert!(minus > 0 && minus < pairs.len());
}

#[test]
fn frft_is_additive_up_to_a_phase() {
    let wrap = |a: f64| {
        let t = std::f64::consts::TAU;
        let r = a.rem_euclid(t);
        if r > std::f64::consts::PI {
            r - t
        } else {
            r
        }
    };
    let f = hg(2);
    for (a, b) in [(0.8, 1.1), (2.0, 1.5), (-0.7, 2.9), (0.3, -1.9)] {
        let lhs = frft_transform(a, &frft_transform(b, &f).unwrap()).unwrap();
        let rhs = frft_transform(wrap(a + b), &f).unwrap();
        let k = lhs.inner(&rhs).unwrap() / rhs.norm_sq();
        assert!((k.norm() - 1.0).abs() <= 1e-6, "({a}, {b}): |c| = {}", k.norm());
        assert!(max_diff(&lhs, &rhs, k) / sup(&f) <= 1e-6);
    }
}
