mod common;

use proptest::prelude::*;
use subshift_core::shift::desk;
use subshift_core::{
    AlgebraElement, BasicSet, Correspondence, CylinderAlgebra, Scalar, StarCalculus, StarElement,
    Subshift, Symbol, Word,
};

fn shift(i: usize) -> Subshift {
    match i {
        0 => desk::full_shift(2),
        1 => desk::golden_mean(),
        2 => desk::even_shift(),
        3 => desk::one_point(),
        _ => desk::golden_mean_two_block(),
    }
}

fn raw_word(max: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0u16..3, 0..=max)
}

fn fit(alg: &CylinderAlgebra, w: &[u16]) -> Word {
    let n = alg.shift().alphabet().len() as u16;
    w.iter().map(|s| Symbol(s % n)).collect()
}

#[derive(Clone, Debug)]
struct Mono {
    nu: Vec<u16>,
    mu: Vec<u16>,
    alpha: Vec<u16>,
    beta: Vec<u16>,
    c: i64,
}

fn mono() -> impl Strategy<Value = Mono> {
    (
        raw_word(2),
        raw_word(2),
        raw_word(2),
        raw_word(2),
        -3i64..=3,
    )
        .prop_map(|(nu, mu, alpha, beta, c)| Mono {
            nu,
            mu,
            alpha,
            beta,
            c,
        })
}

/// `c · S_ν 1_{C(α,β)} S_μ^*`.
fn build(calc: &StarCalculus<'_>, m: &Mono) -> StarElement {
    let alg = calc.algebra();
    let f = alg
        .basic(&BasicSet::new(fit(alg, &m.alpha), fit(alg, &m.beta)))
        .unwrap();
    let p = calc
        .product(&[
            &calc.s_word(&fit(alg, &m.nu)).unwrap(),
            &calc.diag(&f).unwrap(),
            &calc.s_word_adjoint(&fit(alg, &m.mu)).unwrap(),
        ])
        .unwrap();
    calc.scale(&p, Scalar::int(m.c))
}

fn sum(calc: &StarCalculus<'_>, ms: &[Mono]) -> StarElement {
    ms.iter().fold(StarElement::zero(), |acc, m| {
        calc.add(&acc, &build(calc, m)).unwrap()
    })
}

fn elems() -> impl Strategy<Value = Vec<Mono>> {
    prop::collection::vec(mono(), 1..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative(i in 0usize..5, x in elems(), y in elems(), z in elems()) {
        let alg = CylinderAlgebra::new(shift(i));
        let calc = StarCalculus::new(&alg);
        let (x, y, z) = (sum(&calc, &x), sum(&calc, &y), sum(&calc, &z));
        let l = calc.mul(&calc.mul(&x, &y).unwrap(), &z).unwrap();
        let r = calc.mul(&x, &calc.mul(&y, &z).unwrap()).unwrap();
        prop_assert!(calc.equal(&l, &r).unwrap());
    }

    #[test]
    fn multiplication_is_bilinear(i in 0usize..5, x in elems(), y in elems(), z in elems(), c in -4i64..=4) {
        let alg = CylinderAlgebra::new(shift(i));
        let calc = StarCalculus::new(&alg);
        let (x, y, z) = (sum(&calc, &x), sum(&calc, &y), sum(&calc, &z));
        let l = calc.mul(&x, &calc.add(&calc.scale(&y, Scalar::int(c)), &z).unwrap()).unwrap();
        let r = calc.add(&calc.scale(&calc.mul(&x, &y).unwrap(), Scalar::int(c)), &calc.mul(&x, &z).unwrap()).unwrap();
        prop_assert!(calc.equal(&l, &r).unwrap());
    }

    #[test]
    fn adjoint_is_an_anti_multiplicative_involution(i in 0usize..5, x in elems(), y in elems()) {
        let alg = CylinderAlgebra::new(shift(i));
        let calc = StarCalculus::new(&alg);
        let (x, y) = (sum(&calc, &x), sum(&calc, &y));
        let l = calc.adjoint(&calc.mul(&x, &y).unwrap());
        let r = calc.mul(&calc.adjoint(&y), &calc.adjoint(&x)).unwrap();
        prop_assert!(calc.equal(&l, &r).unwrap());
        prop_assert!(calc.equal(&calc.adjoint(&calc.adjoint(&x)), &x).unwrap());
    }

    #[test]
    fn unit_is_two_sided(i in 0usize..5, x in elems()) {
        let alg = CylinderAlgebra::new(shift(i));
        let calc = StarCalculus::new(&alg);
        let x = sum(&calc, &x);
        let one = calc.unit().unwrap();
        prop_assert!(calc.equal(&calc.mul(&one, &x).unwrap(), &x).unwrap());
        prop_assert!(calc.equal(&calc.mul(&x, &one).unwrap(), &x).unwrap());
    }

    #[test]
    fn grading_is_a_convolution(i in 0usize..5, x in elems(), y in elems()) {
        let alg = CylinderAlgebra::new(shift(i));
        let calc = StarCalculus::new(&alg);
        let (x, y) = (sum(&calc, &x), sum(&calc, &y));
        let gx = calc.gauge_grade(&x);
        let gy = calc.gauge_grade(&y);
        let mut expected: std::collections::BTreeMap<i64, StarElement> = Default::default();
        for (dx, px) in &gx {
            for (dy, py) in &gy {
                let e = expected.entry(dx + dy).or_insert_with(StarElement::zero);
                *e = calc.add(e, &calc.mul(px, py).unwrap()).unwrap();
            }
        }
        let got = calc.gauge_grade(&calc.mul(&x, &y).unwrap());
        for (d, part) in &got {
            prop_assert!(calc.equal(part, expected.get(d).unwrap_or(&StarElement::zero())).unwrap());
        }
        for (d, part) in &expected {
            prop_assert!(calc.equal(part, got.get(d).unwrap_or(&StarElement::zero())).unwrap());
        }
    }

    #[test]
    fn iota_is_a_unital_homomorphism(i in 0usize..5, a in raw_word(3), b in raw_word(3), c in raw_word(3), d in raw_word(3)) {
        let alg = CylinderAlgebra::new(shift(i));
        let f = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let g = alg.basic(&BasicSet::new(fit(&alg, &c), fit(&alg, &d))).unwrap();
        let lhs = alg.iota(&alg.mul(&f, &g).unwrap()).unwrap();
        let rhs = alg.mul(&alg.iota(&f).unwrap(), &alg.iota(&g).unwrap()).unwrap();
        prop_assert!(alg.equal(&lhs, &rhs).unwrap());
        prop_assert!(alg.equal(&alg.iota(&alg.unit()).unwrap(), &alg.unit()).unwrap());
        if f.level().k == 0 {
            prop_assert!(alg.equal(&alg.refine_a(&f).unwrap(), &f).unwrap());
        }
    }

    #[test]
    fn coarsening_is_canonical(i in 0usize..5, a in raw_word(3), b in raw_word(3), up in 0usize..3) {
        let alg = CylinderAlgebra::new(shift(i));
        let f = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let mut g = f.clone();
        for _ in 0..up {
            g = alg.iota(&g).unwrap();
        }
        prop_assert_eq!(alg.coarsen(&g).unwrap(), alg.coarsen(&f).unwrap());
    }

    #[test]
    fn embedding_is_multiplicative(i in 0usize..5, a in raw_word(2), b in raw_word(2), c in raw_word(2)) {
        // C(α,β) ∩ C(γ,β) = C(β) ∩ σ^{-|β|}(σ^{|α|}C(α) ∩ σ^{|γ|}C(γ))
        let alg = CylinderAlgebra::new(shift(i));
        let (a, b, c) = (fit(&alg, &a), fit(&alg, &b), fit(&alg, &c));
        let f = alg.basic(&BasicSet::new(a.clone(), b.clone())).unwrap();
        let g = alg.basic(&BasicSet::new(c.clone(), b.clone())).unwrap();
        let both = alg.mul(&f, &g).unwrap();
        for p in alg.sample_points(both.level()).unwrap() {
            let inside = |mu: &Word| {
                p.prefix.starts_with(&b)
                    && alg.shift().prepend_word(&mu.concat(&p.prefix.drop_prefix(b.len())), p.tail).is_some()
            };
            let expected = if inside(&a) && inside(&c) { Scalar::one() } else { Scalar::zero() };
            prop_assert_eq!(alg.evaluate(&both, &p).unwrap(), expected);
        }
    }

    #[test]
    fn inner_product_axioms(i in 0usize..5, x in inner_elem(), y in inner_elem(), a in raw_word(2), b in raw_word(2)) {
        let alg = CylinderAlgebra::new(shift(i));
        let h = Correspondence::new(&alg);
        let (x, y) = (corr(&alg, &x), corr(&alg, &y));
        let f = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let f = f.scale(Scalar::new(num_rational::Rational64::new(1, 2), num_rational::Rational64::new(3, 1)));
        let xy = h.inner_product(&x, &y).unwrap();
        prop_assert!(alg.equal(&xy, &h.inner_product(&y, &x).unwrap().adjoint()).unwrap());
        let lhs = h.inner_product(&x, &h.right_action(&y, &f).unwrap()).unwrap();
        prop_assert!(alg.equal(&lhs, &alg.mul(&xy, &f).unwrap()).unwrap());
        let xx = h.inner_product(&x, &x).unwrap();
        prop_assert!(xx.terms().all(|(_, c)| c.is_nonnegative()));
        prop_assert_eq!(xx.is_zero(), x.is_zero());
    }

    #[test]
    fn lambda_is_a_star_homomorphism(i in 0usize..5, s in 0u16..3, a in raw_word(3), b in raw_word(3), c in raw_word(3), d in raw_word(3)) {
        let alg = CylinderAlgebra::new(shift(i));
        let s = Symbol(s % alg.shift().alphabet().len() as u16);
        let f = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let f = f.scale(Scalar::new(num_rational::Rational64::new(2, 1), num_rational::Rational64::new(-1, 1)));
        let g = alg.basic(&BasicSet::new(fit(&alg, &c), fit(&alg, &d))).unwrap();
        let lhs = alg.lambda(s, &alg.mul(&f, &g).unwrap()).unwrap();
        let rhs = alg.mul(&alg.lambda(s, &f).unwrap(), &alg.lambda(s, &g).unwrap()).unwrap();
        prop_assert!(alg.equal(&lhs, &rhs).unwrap());
        prop_assert!(alg.equal(&alg.lambda(s, &f.adjoint()).unwrap(), &alg.lambda(s, &f).unwrap().adjoint()).unwrap());
    }

    #[test]
    fn phi_tilde_is_a_unital_homomorphism(i in 0usize..5, a in raw_word(3), b in raw_word(3), c in raw_word(3), d in raw_word(3)) {
        let alg = CylinderAlgebra::new(shift(i));
        let f = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let g = alg.basic(&BasicSet::new(fit(&alg, &c), fit(&alg, &d))).unwrap();
        let lhs = alg.phi_tilde(&alg.mul(&f, &g).unwrap()).unwrap();
        let rhs = alg.mul(&alg.phi_tilde(&f).unwrap(), &alg.phi_tilde(&g).unwrap()).unwrap();
        prop_assert!(alg.equal(&lhs, &rhs).unwrap());
        prop_assert!(alg.equal(&alg.phi_tilde(&alg.unit()).unwrap(), &alg.unit()).unwrap());
    }

    #[test]
    fn sigma_forward_undoes_backward(i in 0usize..5, a in raw_word(3), b in raw_word(3)) {
        let alg = CylinderAlgebra::new(shift(i));
        let e = alg.basic(&BasicSet::new(fit(&alg, &a), fit(&alg, &b))).unwrap();
        let back = alg.set_sigma_forward(&alg.set_sigma_backward(&e).unwrap()).unwrap();
        // σ(σ^{-1}(E)) = E ∩ σ(X)
        let image = alg.set_sigma_forward(&alg.unit()).unwrap();
        prop_assert!(alg.equal(&back, &alg.mul(&e, &image).unwrap()).unwrap());
    }
}

#[derive(Clone, Debug)]
struct InnerElem(Vec<(u16, Vec<u16>, Vec<u16>, i64)>);

fn inner_elem() -> impl Strategy<Value = InnerElem> {
    prop::collection::vec((0u16..3, raw_word(2), raw_word(2), -2i64..=2), 0..=3).prop_map(InnerElem)
}

/// `Σ c ξ_a 1_{C(α,β)}`.
fn corr(alg: &CylinderAlgebra, e: &InnerElem) -> subshift_core::CorrElement {
    let h = Correspondence::new(alg);
    let n = alg.shift().alphabet().len() as u16;
    e.0.iter().fold(h.zero(), |acc, (a, al, be, c)| {
        let f: AlgebraElement = alg
            .basic(&BasicSet::new(fit(alg, al), fit(alg, be)))
            .unwrap();
        let t = h.scale(
            &h.right_action(&h.xi(Symbol(a % n)).unwrap(), &f).unwrap(),
            Scalar::int(*c),
        );
        h.add(&acc, &t).unwrap()
    })
}
