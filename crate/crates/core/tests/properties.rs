//! Randomized invariants of every module, with fixed seeds.

mod common;

use common::props::*;
use common::{bilinear, float_signature, to_f64};
use knotforms::arith::{factor_int_poly, Poly};
use knotforms::brieskorn::{brieskorn_seifert, germ_report, BrieskornGerm};
use knotforms::cobordism::{fox_milnor, validate_eps_form};
use knotforms::even_dim::{presented_module_structure, validate_presentation, TorsionPresentation};
use knotforms::links::{handle_data, validate_linking_matrix, Framings};
use knotforms::quadratic::{karl, levine_congruence_check, signature, SymmetricForm};
use knotforms::seifert::{is_quasi_unipotent, Normalization, SeifertMatrix};
use knotforms::sphere_groups::{bp4k_order, bp_class, embeddable_spheres_group, im_j_order, GroupKind};
use knotforms::{Int, IntMatrix, LaurentPoly};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(config(96, 0x6b6e_6f74))]

    // exact arithmetic

    #[test]
    fn det_of_inverse(m in square(5, -6, 6)) {
        let r = m.to_rat();
        if let Ok(inv) = r.inverse() {
            prop_assert!((r.det().unwrap() * inv.det().unwrap()).is_one());
            prop_assert_eq!(r.checked_mul(&inv).unwrap(), knotforms::RatMatrix::identity(m.rows()));
        } else {
            prop_assert!(m.det().unwrap().is_zero());
        }
    }

    #[test]
    fn kronecker_associative(a in square(3, -3, 3), b in square(3, -3, 3), c in square(2, -3, 3)) {
        let left = a.kronecker(&b).kronecker(&c);
        prop_assert_eq!(left.rows(), a.rows() * b.rows() * c.rows());
        prop_assert_eq!(left, a.kronecker(&b.kronecker(&c)));
    }

    #[test]
    fn snf_divisibility(m in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| matrix(r, c, -5, 5))) {
        snf_chain(&m)?;
    }

    #[test]
    fn factorization_reconstructs(
        a in prop::collection::vec(-4i64..=4, 1..5),
        b in prop::collection::vec(-4i64..=4, 1..5),
        shift in -3i64..=3,
    ) {
        let p = &Poly::from_i64(&a) * &Poly::from_i64(&b);
        prop_assume!(!p.is_zero());
        let f = LaurentPoly::from_poly(&p, shift);
        let fac = factor_int_poly(&f).unwrap();
        prop_assert_eq!(fac.expand(), f);
        let (pa, pb) = (Poly::<Int>::from_i64(&a), Poly::<Int>::from_i64(&b));
        let nonconst = |q: &Poly<Int>| q.degree().is_some_and(|d| d > 0) && q.coeffs()[0] != Int::zero();
        if nonconst(&pa) && nonconst(&pb) {
            prop_assert!(fac.irreducible_count() >= 2);
        }
    }

    // seifert_core

    #[test]
    fn symmetrization(s in seifert(6, -4, 4)) {
        symmetrization_identity(&s)?;
    }

    #[test]
    fn monodromy_of_fibered_forms(a in eps_form(-1, 3), q in prop::sample::select(vec![1u32, 3, 5])) {
        let s = SeifertMatrix::new(a, q).unwrap();
        prop_assume!(s.is_fibered_form());
        let h = s.integral_monodromy().unwrap();
        prop_assert!(h.det().unwrap().abs().is_one());
        let inv = h.to_rat().inverse().unwrap();
        prop_assert_eq!(h.to_rat().checked_mul(&inv).unwrap(), knotforms::RatMatrix::identity(h.rows()));
    }

    #[test]
    fn alexander_at_one(s in seifert(6, -3, 3)) {
        let raw = s.alexander_polynomial(Normalization::Raw).unwrap();
        let a = s.matrix();
        let sym = a.checked_add(&a.transpose().scale(&Int::from(s.epsilon()))).unwrap();
        prop_assert_eq!(raw.eval_at_one(), sym.det().unwrap());
    }

    #[test]
    fn conway_is_symmetric(s in seifert(6, -3, 3)) {
        if let Ok(d) = s.alexander_polynomial(Normalization::Conway) {
            prop_assert!(d.is_symmetric());
            prop_assert_eq!(d.invert_variable(), d.clone());
            prop_assert!(d.eval_at_one().is_one());
        }
    }

    #[test]
    fn char_poly_matches_alexander(a in (1usize..=5).prop_flat_map(unimodular), q in 0u32..=5) {
        let s = SeifertMatrix::new(a, q).unwrap();
        let h = s.integral_monodromy().unwrap();
        let cp = knotforms::arith::char_poly_int(&h).unwrap();
        let (delta, _) = s.alexander_polynomial(Normalization::Raw).unwrap().to_poly();
        prop_assert_eq!(cp.with_positive_leading(), delta.with_positive_leading());
    }

    #[test]
    fn quasi_unipotence_conjugation_invariant(
        (h, p) in (1usize..=4).prop_flat_map(|n| (matrix(n, n, -2, 2), unimodular(n)))
    ) {
        let hr = h.to_rat();
        let pr = p.to_rat();
        let conj = pr.inverse().unwrap().checked_mul(&hr).unwrap().checked_mul(&pr).unwrap();
        prop_assert_eq!(is_quasi_unipotent(&hr).unwrap(), is_quasi_unipotent(&conj).unwrap());
    }

    // quadratic_forms

    #[test]
    fn signature_congruence((m, p) in (1usize..=6).prop_flat_map(|n| (matrix(n, n, -4, 4), unimodular(n)))) {
        signature_congruence_invariant(&m, &p)?;
    }

    #[test]
    fn even_unimodular_mod_8(m in even_unimodular()) {
        even_unimodular_signature(&m)?;
    }

    #[test]
    fn arf_independent_of_basis((qf, p) in arf_case()) {
        arf_basis_independent(&qf, &p)?;
    }

    #[test]
    fn levine_on_unimodular_odd(a in eps_form(-1, 4), q in prop::sample::select(vec![1u32, 3, 5, 7])) {
        let s = SeifertMatrix::new(a, q).unwrap();
        let c = levine_congruence_check(&s).unwrap();
        prop_assert!(c.holds, "{:?}", c);
    }

    #[test]
    fn signature_bounded_by_rank(m in square(6, -4, 4)) {
        let s = m.checked_add(&m.transpose()).unwrap();
        let sig = signature(&SymmetricForm::new(s.clone()).unwrap());
        prop_assert!(sig.unsigned_abs() as usize <= s.rows());
        let eig = to_f64(&s).symmetric_eigen();
        let definite = eig.eigenvalues.iter().all(|&v| v > 1e-9) || eig.eigenvalues.iter().all(|&v| v < -1e-9);
        prop_assert_eq!(sig.unsigned_abs() as usize == s.rows(), definite);
        prop_assert_eq!(sig, float_signature(&s));
    }

    // cobordism

    #[test]
    fn metaboliser_witnesses_verify(a in eps_form(-1, 2), b in eps_form(1, 2), pick in any::<bool>()) {
        if pick {
            metaboliser_certificate(&a, -1)?;
        } else {
            metaboliser_certificate(&b, 1)?;
        }
    }

    #[test]
    fn fox_milnor_accepts_norms(mut c in prop::collection::vec(-3i64..=3, 1..5)) {
        let s: i64 = c.iter().sum();
        c[0] += 1 - s;
        let q = Poly::from_i64(&c);
        let mut rev = c.clone();
        rev.reverse();
        let qstar = Poly::from_i64(&rev);
        let norm = LaurentPoly::from_poly(&(&q * &qstar), 0);
        prop_assert!(fox_milnor(&norm).unwrap());
    }

    #[test]
    fn signature_additive(a in eps_form(1, 2), b in eps_form(1, 2)) {
        let f1 = validate_eps_form(a, 1).unwrap();
        let f2 = validate_eps_form(b, 1).unwrap();
        let sig = |m: IntMatrix| signature(&SymmetricForm::new(m).unwrap());
        let diff = f1.minus(&f2).unwrap();
        prop_assert_eq!(sig(diff.symmetrization()), sig(f1.symmetrization()) - sig(f2.symmetrization()));
    }

    // brieskorn

    #[test]
    fn brieskorn_rank_and_monodromy(e in prop::collection::vec(2u32..=6, 1..=5)) {
        let g = BrieskornGerm::new(e).unwrap();
        prop_assume!(g.milnor_number() <= 64u32.into());
        let s = brieskorn_seifert(&g);
        prop_assert_eq!(Int::from(s.rank()), Int::from(g.milnor_number()));
        let r = germ_report(&g);
        prop_assert_eq!(r.quasi_unipotent, Some(true));
    }

    #[test]
    fn brieskorn_permutation_covariance(e in prop::collection::vec(2u32..=5, 2..=4), seed in any::<u64>()) {
        let g = BrieskornGerm::new(e.clone()).unwrap();
        prop_assume!(g.milnor_number() <= 48u32.into());
        let mut perm = e.clone();
        let k = (seed as usize) % perm.len();
        perm.rotate_left(k);
        let last = perm.len() - 1;
        perm.swap(0, last);
        let (r1, r2) = (germ_report(&g), germ_report(&BrieskornGerm::new(perm).unwrap()));
        prop_assert_eq!(r1.unimodular, r2.unimodular);
        prop_assert_eq!(r1.signature, r2.signature);
        prop_assert_eq!(r1.karl, r2.karl);
        prop_assert_eq!(r1.alexander_conway, r2.alexander_conway);
        let (p1, _) = r1.alexander_raw.to_poly();
        let (p2, _) = r2.alexander_raw.to_poly();
        prop_assert_eq!(p1.with_positive_leading(), p2.with_positive_leading());
    }

    // links

    #[test]
    fn linking_is_intersection_off_diagonal(s in seifert(5, -3, 3)) {
        let i = s.intersection_form();
        for (a, b, l) in handle_data(&s).linking {
            prop_assert_eq!(&l, &i[(a, b)]);
        }
    }

    #[test]
    fn mod2_framings_are_karl_values(a in square(4, -3, 3), q in prop::sample::select(vec![5u32, 9, 11])) {
        let s = SeifertMatrix::new(a.clone(), q).unwrap();
        let Framings::Mod2(f) = handle_data(&s).framings else {
            return Err(TestCaseError::fail("expected mod 2 framings"));
        };
        for (j, v) in f.iter().enumerate() {
            let mut e = vec![Int::zero(); a.rows()];
            e[j] = Int::one();
            prop_assert_eq!(Int::from(*v), bilinear(&a, &e, &e).mod_floor(&Int::from(2)));
        }
    }

    #[test]
    fn linking_matrix_round_trip(m in square(4, -3, 3), dim in 1u32..=6) {
        let sign = if dim % 2 == 1 { Int::one() } else { -Int::one() };
        let n = m.rows();
        let l = IntMatrix::from_fn(n, n, |i, j| match i.cmp(&j) {
            std::cmp::Ordering::Less => m[(i, j)].clone(),
            std::cmp::Ordering::Equal => Int::zero(),
            std::cmp::Ordering::Greater => &sign * &m[(j, i)],
        });
        let v = validate_linking_matrix(l.clone(), dim).unwrap();
        prop_assert_eq!(validate_linking_matrix(v.matrix().clone(), dim).unwrap(), v);
    }

    // even_dim

    #[test]
    fn torsion_presentations((d, y, diag, q, perm_seed) in torsion_inputs()) {
        let p = build_presentation(&d, &y, &diag, q);
        let check = validate_presentation(&p);
        prop_assert!(check.relation_violations.is_empty());
        prop_assume!(check.type_k);
        let m = presented_module_structure(&p).unwrap();
        let expected: Int = d.iter().map(|&x| Int::from(x)).product();
        prop_assert!(!m.torsion_order.is_zero());
        prop_assert_eq!(&m.torsion_order, &expected.abs());

        let n = d.len();
        let mut perm: Vec<usize> = (0..n).collect();
        perm.rotate_left(perm_seed % n);
        let pp = p.permuted(&perm).unwrap();
        let mp = presented_module_structure(&pp).unwrap();
        prop_assert_eq!(mp.torsion_invariants, m.torsion_invariants);
        prop_assert_eq!(mp.free_divisors, m.free_divisors);
    }

    #[test]
    fn relation_checked_in_both_orders(
        (d, a, b) in (1usize..=3).prop_flat_map(|n| (
            prop::collection::vec(0i64..=4, n),
            matrix(n, n, -3, 3),
            matrix(n, n, -3, 3),
        )),
        q in 1u32..=4,
    ) {
        let p = TorsionPresentation::new(d.iter().map(|&x| Int::from(x)).collect(), a, b, q).unwrap();
        let n = d.len();
        let perm: Vec<usize> = (0..n).rev().collect();
        let v1 = validate_presentation(&p).relation_violations;
        let v2 = validate_presentation(&p.permuted(&perm).unwrap()).relation_violations;
        let mut mapped: Vec<(usize, usize)> = v2.iter().map(|(i, j, _)| (perm[*i], perm[*j])).collect();
        mapped.sort();
        let mut orig: Vec<(usize, usize)> = v1.iter().map(|(i, j, _)| (*i, *j)).collect();
        orig.sort();
        prop_assert_eq!(orig, mapped);
    }
}

fn torsion_inputs() -> impl Strategy<Value = (Vec<i64>, Vec<i64>, Vec<i64>, u32, usize)> {
    (1usize..=3).prop_flat_map(|n| {
        (
            prop::collection::vec(2i64..=7, n),
            prop::collection::vec(-2i64..=2, n * n),
            prop::collection::vec(-3i64..=3, n),
            1u32..=4,
            any::<usize>(),
        )
    })
}

/// `a_ij = (d_j / g) y_ij`, `b_ji = -(-1)^{q+1} (d_i / g) y_ij` with `g = gcd(d_i, d_j)`,
/// which satisfies the relation for every pair.
fn build_presentation(d: &[i64], y: &[i64], diag: &[i64], q: u32) -> TorsionPresentation {
    let n = d.len();
    let s = if q % 2 == 1 { 1 } else { -1 };
    let mut a = IntMatrix::zeros(n, n);
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if i == j {
                a[(i, i)] = Int::from(diag[i]);
                b[(i, i)] = Int::from(-s * diag[i]);
            } else if i < j {
                let g = d[i].gcd(&d[j]);
                let yij = y[i * n + j];
                a[(i, j)] = Int::from(d[j] / g * yij);
                b[(j, i)] = Int::from(-s * (d[i] / g) * yij);
                let yji = y[j * n + i];
                a[(j, i)] = Int::from(d[i] / g * yji);
                b[(i, j)] = Int::from(-s * (d[j] / g) * yji);
            }
        }
    }
    TorsionPresentation::new(d.iter().map(|&x| Int::from(x)).collect(), a, b, q).unwrap()
}

#[test]
fn sphere_group_sanity() {
    for k in 2..=24 {
        assert!(bp4k_order(k).unwrap().is_multiple_of(&Int::from(4)), "k = {k}");
        let order = im_j_order(k).unwrap();
        for p in 2..=2 * k + 1 {
            if (2..p).all(|d| p % d != 0) && (2 * k) % (p - 1) == 0 {
                assert!(order.is_multiple_of(&Int::from(p)), "p = {p} must divide |Im J| for k = {k}");
            }
        }
    }
    for n in (2..=200).step_by(2) {
        assert_eq!(embeddable_spheres_group(n).kind, GroupKind::Trivial);
    }
}

#[test]
fn pipeline_even_unimodular_forms_divisible_by_8() {
    let mut checked = 0;
    for a0 in 2..=7u32 {
        for a1 in a0..=7 {
            for a2 in a1..=7 {
                let g = BrieskornGerm::new(vec![a0, a1, a2]).unwrap();
                if g.milnor_number() > 64u32.into() {
                    continue;
                }
                let s = brieskorn_seifert(&g);
                if !s.is_unimodular() {
                    continue;
                }
                let sig = signature(&SymmetricForm::new(s.intersection_form()).unwrap());
                assert_eq!(sig.rem_euclid(8), 0, "germ {g}");
                assert!(bp_class(&s).is_ok(), "germ {g}");
                checked += 1;
            }
        }
    }
    assert!(checked >= 3, "only {checked} unimodular germs");
}

#[test]
fn karl_of_odd_brieskorn_matches_levine() {
    for e in [&[2u32, 3][..], &[2, 2, 2, 3], &[2, 2, 2, 2, 2, 3], &[2, 3, 2, 2], &[3, 2, 2, 2, 2, 2]] {
        let s = brieskorn_seifert(&BrieskornGerm::new(e.to_vec()).unwrap());
        assert_eq!(karl(&s).unwrap(), 1, "{e:?}");
        assert!(levine_congruence_check(&s).unwrap().holds);
    }
}
