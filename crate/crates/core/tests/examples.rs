mod common;

use common::word;
use subshift_core::conjugacy::{self, desk as codes, ConjugacyMaps};
use subshift_core::shift::desk;
use subshift_core::verify;
use subshift_core::{
    BasicSet, BlockCode, BratteliDiagram, Correspondence, CylinderAlgebra, K0Presentation, Level,
    Scalar, StarCalculus, Subshift, TailType, Tower, WindowTail, Word,
};

fn cyl(alg: &CylinderAlgebra, mu: &str, nu: &str) -> subshift_core::AlgebraElement {
    let x = alg.shift();
    alg.basic(&BasicSet::new(word(x, mu), word(x, nu))).unwrap()
}

#[test]
fn language_membership() {
    let g = desk::golden_mean();
    assert!(!g.is_in_language(&word(&g, "11")).unwrap());
    assert!(g.is_in_language(&word(&g, "0101")).unwrap());
    assert!(g.is_in_language(&Word::empty()).unwrap());
    assert!(g
        .is_in_language(&Word::from_symbols(vec![subshift_core::Symbol(5)]))
        .is_err());
    assert_eq!(desk::full_shift(2).enumerate_language(3).len(), 8);
    assert_eq!(desk::one_point().enumerate_language(5).len(), 1);
    let two: Vec<String> = g
        .enumerate_language(2)
        .iter()
        .map(|w| g.alphabet().format_word(w))
        .collect();
    assert_eq!(two, ["00", "01", "10"]);
}

#[test]
fn realizable_tails() {
    let g = desk::golden_mean();
    assert_eq!(
        g.realizable_tail_types(),
        [
            TailType::SftWindow(word(&g, "0")),
            TailType::SftWindow(word(&g, "1"))
        ]
    );
    assert_eq!(
        desk::full_shift(3).realizable_tail_types(),
        [TailType::SftWindow(Word::empty())]
    );
    assert_eq!(desk::even_shift().tail_count(), 3);
    let f = desk::full_shift(2);
    assert_eq!(
        f.tail_type_of_window(&Word::empty()).unwrap(),
        WindowTail::Determined(0)
    );
}

#[test]
fn even_shift_windows() {
    let e = desk::even_shift();
    let t = |s: &str| e.tail_type_of_window(&word(&e, s)).unwrap();
    assert!(matches!(t("00"), WindowTail::Indeterminate(_)));
    assert!(matches!(t("0000"), WindowTail::Indeterminate(_)));
    assert!(matches!(t("001"), WindowTail::Determined(_)));
    assert!(matches!(t("01"), WindowTail::Determined(_)));
    assert_ne!(t("01"), t("001"));
}

#[test]
fn left_extension_examples() {
    let g = desk::golden_mean();
    let fmt = |t, l| -> Vec<String> {
        g.left_extensions(t, l)
            .iter()
            .map(|w| g.alphabet().format_word(w))
            .collect()
    };
    assert_eq!(fmt(1, 1), ["ε", "0"]);
    assert_eq!(fmt(0, 1), ["ε", "0", "1"]);
    assert_eq!(fmt(0, 0), ["ε"]);
}

#[test]
fn atom_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    assert_eq!(g.class_count(1), 2);
    let atoms = g.atoms(Level::new(1, 1).unwrap()).unwrap();
    let shown: Vec<(String, usize)> = atoms
        .iter()
        .map(|a| (g.shift().alphabet().format_word(&a.nu), a.cls))
        .collect();
    // class 0 = {x_0 = 0}, class 1 = {x_0 = 1}
    assert_eq!(shown, [("0".into(), 0), ("0".into(), 1), ("1".into(), 0)]);
    let f = CylinderAlgebra::new(desk::full_shift(2));
    assert_eq!(f.atoms(Level::new(2, 2).unwrap()).unwrap().len(), 4);
    let p = CylinderAlgebra::new(desk::one_point());
    assert_eq!(p.atoms(Level::new(3, 4).unwrap()).unwrap().len(), 1);
    assert!(Level::new(2, 0).is_err());
}

#[test]
fn embedding_examples() {
    let f = CylinderAlgebra::new(desk::full_shift(2));
    let c01 = f
        .embed_basic(
            &BasicSet::cylinder(word(f.shift(), "01")),
            Level::new(2, 2).unwrap(),
        )
        .unwrap();
    assert_eq!(c01.support().count(), 1);
    let g = CylinderAlgebra::new(desk::golden_mean());
    let s1 = g
        .embed_basic(
            &BasicSet::shifted_cylinder(word(g.shift(), "1")),
            Level::new(0, 1).unwrap(),
        )
        .unwrap();
    assert!(g.equal(&s1, &cyl(&g, "", "0")).unwrap());
    assert_eq!(s1.support().count(), 1);
    assert!(g.equal(&cyl(&g, "", ""), &g.unit()).unwrap());
    assert!(g
        .embed_basic(
            &BasicSet::cylinder(word(g.shift(), "01")),
            Level::new(1, 1).unwrap()
        )
        .is_err());
}

#[test]
fn iota_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    let up = g.iota(&cyl(&g, "1", "")).unwrap();
    assert!(g.equal(&up, &cyl(&g, "10", "0")).unwrap());
    let f = CylinderAlgebra::new(desk::full_shift(2));
    let up = f.iota(&cyl(&f, "", "0")).unwrap();
    let expected = f.add(&cyl(&f, "0", "00"), &cyl(&f, "1", "01")).unwrap();
    assert!(f.equal(&up, &expected).unwrap());
    let unit = f.iota(&f.unit()).unwrap();
    let sum = f.add(&cyl(&f, "0", "0"), &cyl(&f, "1", "1")).unwrap();
    assert!(f.equal(&unit, &sum).unwrap());
}

#[test]
fn tower_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    let d = BratteliDiagram::build(&g, Tower::A, 5).unwrap();
    assert_eq!(d.sizes, [1, 2, 2, 2, 2, 2]);
    assert_eq!(
        d.stationary_matrix().unwrap(),
        &vec![vec![1, 0], vec![0, 1]]
    );
    let k = K0Presentation::from_diagram(&d);
    assert_eq!((k.rank, k.order_unit.clone()), (Some(2), Some(vec![1, 1])));
    let e = CylinderAlgebra::new(desk::even_shift());
    let d = BratteliDiagram::build(&e, Tower::A, 5).unwrap();
    assert_eq!(d.sizes, [1, 2, 3, 3, 3, 3]);
    assert!(d.stable);
    for m in &d.incidence {
        for i in 0..m[0].len() {
            assert!(m.iter().any(|row| row[i] > 0), "empty column");
        }
    }
    let f = CylinderAlgebra::new(desk::full_shift(2));
    let d = BratteliDiagram::build(&f, Tower::Diagonal, 4).unwrap();
    assert!(d.incidence.iter().all(|m| (0..m[0].len()).all(|i| m
        .iter()
        .map(|r| r[i])
        .sum::<u64>()
        == 2)));
    assert!(K0Presentation::from_diagram(&d).truncated);
}

#[test]
fn lambda_and_phi_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    let (zero, one) = (
        g.shift().alphabet().symbol("0").unwrap(),
        g.shift().alphabet().symbol("1").unwrap(),
    );
    assert!(g.lambda(zero, &cyl(&g, "", "10")).unwrap().is_zero());
    assert!(g
        .equal(&g.lambda(one, &g.unit()).unwrap(), &cyl(&g, "", "0"))
        .unwrap());
    for a in [zero, one] {
        let s = g
            .basic(&BasicSet::shifted_cylinder(Word::single(a)))
            .unwrap();
        assert!(g.equal(&g.lambda(a, &g.unit()).unwrap(), &s).unwrap());
    }
    assert!(g
        .equal(&g.phi_tilde(&cyl(&g, "", "1")).unwrap(), &cyl(&g, "", "01"))
        .unwrap());
    assert!(g
        .equal(&g.phi_tilde(&g.unit()).unwrap(), &g.unit())
        .unwrap());
    assert!(g
        .equal(
            &g.set_sigma_forward(&cyl(&g, "", "1")).unwrap(),
            &cyl(&g, "", "0")
        )
        .unwrap());
    let f = CylinderAlgebra::new(desk::full_shift(2));
    let expected = f.add(&cyl(&f, "", "00"), &cyl(&f, "", "10")).unwrap();
    assert!(f
        .equal(&f.phi_tilde(&cyl(&f, "", "0")).unwrap(), &expected)
        .unwrap());
    assert!(f
        .equal(&f.set_sigma_forward(&f.unit()).unwrap(), &f.unit())
        .unwrap());
    let p = CylinderAlgebra::new(desk::one_point());
    assert!(p
        .equal(&p.set_sigma_forward(&cyl(&p, "", "a")).unwrap(), &p.unit())
        .unwrap());
    assert!(g
        .set_sigma_forward(&g.unit().scale(Scalar::int(2)))
        .is_err());
}

#[test]
fn correspondence_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    let h = Correspondence::new(&g);
    let (zero, one) = (
        g.shift().alphabet().symbol("0").unwrap(),
        g.shift().alphabet().symbol("1").unwrap(),
    );
    let (x0, x1) = (h.xi(zero).unwrap(), h.xi(one).unwrap());
    assert!(g
        .equal(&h.inner_product(&x1, &x1).unwrap(), &cyl(&g, "", "0"))
        .unwrap());
    assert!(g
        .equal(&h.inner_product(&x0, &x0).unwrap(), &g.unit())
        .unwrap());
    assert!(h.inner_product(&x0, &x1).unwrap().is_zero());
    assert!(h
        .equal(&h.right_action(&x1, &g.unit()).unwrap(), &x1)
        .unwrap());
    assert!(h
        .equal(&h.right_action(&x1, &cyl(&g, "1", "")).unwrap(), &x1)
        .unwrap());
    assert!(h.phi(&cyl(&g, "1", ""), &x1).unwrap().is_zero());
    let pairs = h.rank_one_decomposition(&cyl(&g, "1", "")).unwrap();
    assert_eq!(pairs.len(), 2);
    assert!(pairs[1].0.is_zero());
    let unit_pairs = h.rank_one_decomposition(&g.unit()).unwrap();
    assert!(h.equal(&unit_pairs[0].0, &x0).unwrap() && h.equal(&unit_pairs[1].0, &x1).unwrap());
    let p = CylinderAlgebra::new(desk::one_point());
    assert_eq!(
        Correspondence::new(&p)
            .rank_one_decomposition(&p.unit())
            .unwrap()
            .len(),
        1
    );
    // the component condition
    assert!(h
        .element(vec![
            subshift_core::AlgebraElement::zero(Level::new(0, 0).unwrap()),
            g.unit()
        ])
        .is_err());
}

#[test]
fn star_examples() {
    let f = CylinderAlgebra::new(desk::full_shift(2));
    let calc = StarCalculus::new(&f);
    let (s0, s1) = (
        calc.generator_adjoint(subshift_core::Symbol(0)).unwrap(),
        calc.generator(subshift_core::Symbol(1)).unwrap(),
    );
    assert!(calc.mul(&s0, &s1).unwrap().is_zero());
    let g = CylinderAlgebra::new(desk::golden_mean());
    let calc = StarCalculus::new(&g);
    let one = g.shift().alphabet().symbol("1").unwrap();
    let a1 = calc
        .mul(
            &calc.generator_adjoint(one).unwrap(),
            &calc.generator(one).unwrap(),
        )
        .unwrap();
    assert!(calc
        .equal(&a1, &calc.diag(&cyl(&g, "", "0")).unwrap())
        .unwrap());
    assert_eq!(calc.render(&a1).unwrap(), ["1 * [k=0,l=1: E1.0]"]);
    let u = calc.unit().unwrap();
    assert!(calc.equal(&calc.adjoint(&u), &u).unwrap());
    assert!(calc
        .equal(
            &calc
                .cylinder_projection(&Word::empty(), &Word::empty())
                .unwrap(),
            &u
        )
        .unwrap());
    let p = calc
        .cylinder_projection(&word(g.shift(), "1"), &word(g.shift(), "0"))
        .unwrap();
    assert!(calc
        .equal(&p, &calc.diag(&cyl(&g, "1", "0")).unwrap())
        .unwrap());
    assert_eq!(p.homogeneous_degree(), Some(0));
    assert_eq!(calc.generator(one).unwrap().homogeneous_degree(), Some(1));
    assert_eq!(
        calc.a_mu(&word(g.shift(), "01"))
            .unwrap()
            .homogeneous_degree(),
        Some(0)
    );
    let mu = word(g.shift(), "01");
    let nu = word(g.shift(), "10");
    assert!(calc
        .mul(
            &calc.s_word_adjoint(&mu).unwrap(),
            &calc.s_word(&nu).unwrap()
        )
        .unwrap()
        .is_zero());
    // Gaussian coefficients are conjugated by the adjoint.
    let c = Scalar::new(
        num_rational::Rational64::new(1, 2),
        num_rational::Rational64::new(2, 3),
    );
    let x = calc.scale(&calc.generator(one).unwrap(), c);
    let expected = calc.scale(&calc.generator_adjoint(one).unwrap(), c.conj());
    assert!(calc.equal(&calc.adjoint(&x), &expected).unwrap());
    let fs = CylinderAlgebra::new(desk::full_shift(2));
    let calc = StarCalculus::new(&fs);
    for (mu, nu) in [("0", "1"), ("01", "1"), ("", "10")] {
        let p = calc
            .cylinder_projection(&word(fs.shift(), mu), &word(fs.shift(), nu))
            .unwrap();
        assert!(calc
            .equal(&p, &calc.diag(&cyl(&fs, "", nu)).unwrap())
            .unwrap());
    }
}

#[test]
fn verification_depths_from_the_examples() {
    let g = CylinderAlgebra::new(desk::golden_mean());
    assert!(verify::verify_all(&g, 3).unwrap().passed());
    assert!(verify::verify_partial_isometries(&g, 4).unwrap().passed());
    assert!(
        verify::verify_relations(&CylinderAlgebra::new(desk::full_shift(2)), 3)
            .unwrap()
            .passed()
    );
    assert!(
        verify::verify_all(&CylinderAlgebra::new(desk::one_point()), 5)
            .unwrap()
            .passed()
    );
}

fn pair() -> (Subshift, Subshift, BlockCode, BlockCode) {
    let (x, y) = (desk::golden_mean(), desk::golden_mean_two_block());
    let f = codes::golden_to_two_block(&x, &y);
    let g = codes::two_block_to_golden(&y, &x);
    (x, y, f, g)
}

#[test]
fn block_code_examples() {
    let (x, y, f, g) = pair();
    assert!(conjugacy::verify_block_code(&x, &y, &f, 5).passed());
    assert!(conjugacy::verify_block_code(&y, &x, &g, 5).passed());
    let id = BlockCode::identity(&x);
    assert!(conjugacy::verify_block_code(&x, &x, &id, 5).passed());
    conjugacy::verify_conjugacy(&x, &x, &id, &id, 4).unwrap();
    // full shift into the golden mean shift
    let full = desk::full_shift(2);
    let bad = BlockCode::new(&full, &x, 1, id.table().clone()).unwrap();
    let r = conjugacy::verify_block_code(&full, &x, &bad, 3);
    assert!(!r.passed());
    assert!(r.sections[0].failures.iter().any(|f| f.left.contains("11")));
    // incomplete tables are rejected up front
    let mut partial = f.table().clone();
    partial.remove(&word(&x, "10"));
    assert!(BlockCode::new(&x, &y, 2, partial).is_err());
}

#[test]
fn identity_conjugacy_is_trivial() {
    let x = desk::even_shift();
    let id = BlockCode::identity(&x);
    let cert = conjugacy::verify_conjugacy(&x, &x, &id, &id, 4).unwrap();
    let alg = CylinderAlgebra::new(x);
    let maps = ConjugacyMaps::new(&alg, &alg, &cert);
    let calc = StarCalculus::new(&alg);
    for (a, img) in alg
        .shift()
        .alphabet()
        .symbols()
        .zip(maps.generator_images().unwrap())
    {
        assert!(calc.equal(&img, &calc.generator(a).unwrap()).unwrap());
    }
    for mu in alg.shift().language_up_to(3) {
        let f = alg.basic(&BasicSet::shifted_cylinder(mu)).unwrap();
        assert!(alg.equal(&maps.psi(&f).unwrap(), &f).unwrap());
    }
    let h = Correspondence::new(&alg);
    let xi = h.xi(subshift_core::Symbol(1)).unwrap();
    assert!(h.equal(&maps.t(&xi).unwrap(), &xi).unwrap());
    assert!(conjugacy::verify_corr_isomorphism(&maps, 3)
        .unwrap()
        .passed());
}

#[test]
fn two_block_maps() {
    let (x, y, f, g) = pair();
    let cert = conjugacy::verify_conjugacy(&x, &y, &f, &g, 4).unwrap();
    let (ax, ay) = (CylinderAlgebra::new(x), CylinderAlgebra::new(y));
    let maps = ConjugacyMaps::new(&ax, &ay, &cert);
    assert!(ax
        .equal(&maps.psi(&cyl(&ay, "", "b")).unwrap(), &cyl(&ax, "", "01"))
        .unwrap());
    assert!(ax
        .equal(&maps.psi(&ay.unit()).unwrap(), &ax.unit())
        .unwrap());
    // T(ξ_a) lives on the X-symbol given by a's first coordinate.
    let hy = Correspondence::new(&ay);
    for (a, first) in [("a", "0"), ("b", "0"), ("c", "1")] {
        let t = maps
            .t(&hy.xi(ay.shift().alphabet().symbol(a).unwrap()).unwrap())
            .unwrap();
        for b in ax.shift().alphabet().symbols() {
            assert_eq!(
                t.component(b).is_zero(),
                ax.shift().alphabet().token(b) != first,
                "a={a}"
            );
        }
    }
    let calc = StarCalculus::new(&ax);
    let images = maps.generator_images().unwrap();
    let mut sum = subshift_core::StarElement::zero();
    for img in &images {
        assert_eq!(img.len(), 1);
        let (nu, mu, coeff) = img.terms().next().unwrap();
        assert_eq!((nu.len(), mu.len()), (1, 0));
        assert!(coeff.is_indicator());
        sum = calc
            .add(&sum, &calc.mul(img, &calc.adjoint(img)).unwrap())
            .unwrap();
    }
    assert!(calc.equal(&sum, &calc.unit().unwrap()).unwrap());
    assert!(conjugacy::verify_generator_images(&maps, 3)
        .unwrap()
        .passed());
}

#[test]
fn mutated_forward_code_is_caught() {
    let (x, y, f, g) = pair();
    let mut table = f.table().clone();
    table.insert(word(&x, "00"), y.alphabet().symbol("b").unwrap());
    table.insert(word(&x, "01"), y.alphabet().symbol("a").unwrap());
    let bad = BlockCode::new(&x, &y, 2, table).unwrap();
    assert!(conjugacy::verify_conjugacy(&x, &y, &bad, &g, 3).is_err());
    let cert = subshift_core::ConjugacyCertificate::assume(bad, g, 3);
    let (ax, ay) = (CylinderAlgebra::new(x), CylinderAlgebra::new(y));
    let maps = ConjugacyMaps::new(&ax, &ay, &cert);
    let r = conjugacy::verify_corr_isomorphism(&maps, 2).unwrap();
    assert!(!r.passed());
}

#[test]
fn comparisons() {
    let (x, y, f, g) = pair();
    let cert = conjugacy::verify_conjugacy(&x, &y, &f, &g, 3).unwrap();
    let (ax, ay) = (CylinderAlgebra::new(x.clone()), CylinderAlgebra::new(y));
    let c = conjugacy::compare_invariants(&ax, &ay, 3, Some(&cert)).unwrap();
    assert!(c.class_counts_agree);
    assert!(c.isomorphism.unwrap().passed());
    let same = conjugacy::compare_invariants(&ax, &ax, 3, None).unwrap();
    assert!(same.class_counts_agree && same.isomorphism.is_none());
    let af = CylinderAlgebra::new(desk::full_shift(2));
    let c = conjugacy::compare_invariants(&ax, &af, 3, None).unwrap();
    assert!(!c.class_counts_agree);
    assert_eq!(c.class_counts, (vec![1, 2, 2, 2], vec![1, 1, 1, 1]));
}
