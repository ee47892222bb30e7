use proptest::prelude::*;

use tphopf::exactlin::{format_rational, parse_rational, unit_vec, Vector};
use tphopf::gallery;
use tphopf::hopfcore::{group_algebra, truncated_polynomial};
use tphopf::invariants::{ideal_closure, is_field};
use tphopf::tpalg::{bracket_vanishes_on, derivation_bracket, tp_center, verify_tp_algebra, x_power_ddx};
use tphopf::{rat, ratio, Matrix, Rational, Subspace, TensorIndex};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(small_rational(), c), r)
            .prop_map(move |rows| Matrix::from_rows(rows, c).unwrap())
    })
}

fn vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(small_rational(), n), 0..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kernel_is_exact_and_rank_nullity_holds(m in matrix(5, 6)) {
        let k = m.kernel();
        for v in k.basis() {
            prop_assert!(m.mul_vec(v).iter().all(|c| *c == rat(0)));
        }
        prop_assert_eq!(m.rank() + k.dim(), m.cols());
        prop_assert_eq!(m.column_space().dim(), m.rank());
    }

    #[test]
    fn span_is_canonical(gens in vectors(4, 5), mix in prop::collection::vec(small_rational(), 25)) {
        let s = Subspace::span(4, &gens);
        // random combinations of the generators plus the generators span the same space
        let mut more = gens.clone();
        for (k, row) in mix.chunks(5).enumerate().take(gens.len()) {
            let mut v = vec![rat(0); 4];
            for (c, g) in row.iter().zip(&gens) {
                for (x, y) in v.iter_mut().zip(g) {
                    *x += c * y;
                }
            }
            more.insert(k, v);
        }
        more.reverse();
        prop_assert_eq!(Subspace::span(4, &more), s.clone());
        for g in &gens {
            prop_assert!(s.contains(g));
            let coords = s.coordinates(g).unwrap();
            prop_assert_eq!(&s.embed(&coords), g);
        }
    }

    #[test]
    fn sum_and_intersection_dimensions(a in vectors(5, 3), b in vectors(5, 3)) {
        let u = Subspace::span(5, &a);
        let v = Subspace::span(5, &b);
        let sum = u.sum(&v).unwrap();
        let cap = u.intersect(&v).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + v.dim());
        prop_assert!(u.contains_subspace(&cap) && v.contains_subspace(&cap));
        prop_assert!(sum.contains_subspace(&u) && sum.contains_subspace(&v));
    }

    #[test]
    fn quotient_coordinates_vanish_exactly_on_the_subspace(gens in vectors(4, 3), x in prop::collection::vec(small_rational(), 4)) {
        let s = Subspace::span(4, &gens);
        let q = s.quotient_coordinates(&x);
        prop_assert_eq!(q.len(), 4 - s.dim());
        prop_assert_eq!(q.iter().all(|c| *c == rat(0)), s.contains(&x));
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(4, 4)) {
        if m.rows() == m.cols() {
            match m.inverse() {
                Some(inv) => {
                    prop_assert!(m.mul(&inv).is_identity());
                    prop_assert!(inv.mul(&m).is_identity());
                }
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn rationals_round_trip_through_text(q in small_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn tensor_index_round_trips(dims in prop::collection::vec(1usize..5, 1..4), seed in any::<usize>()) {
        let t = TensorIndex::new(&dims);
        let flat = seed % t.size();
        prop_assert_eq!(t.flatten(&t.unflatten(flat)), flat);
    }

    #[test]
    fn abelian_group_algebras_are_hopf(orders in prop::collection::vec(1usize..4, 1..3)) {
        let h = group_algebra(&orders);
        prop_assert!(h.verify().pass());
    }

    #[test]
    fn power_derivations_give_tp_algebras(n in 2usize..6, shift in 1usize..4) {
        let tp = derivation_bracket(&truncated_polynomial(n), &x_power_ddx(n, shift)).unwrap();
        prop_assert!(verify_tp_algebra(&tp).unwrap().pass());
        let c = tp_center(&tp).unwrap();
        prop_assert!(c.carrier.contains(&unit_vec(n, 0)));
        prop_assert!(bracket_vanishes_on(&tp, &c.carrier).pass());
    }

    #[test]
    fn ideal_closure_is_a_closure_operator(idx in 0usize..18, gens in vectors(6, 2)) {
        let names = gallery::names();
        let f = gallery::fixture(&names[idx % names.len()]).unwrap();
        let n = f.algebra.dim();
        let gens: Vec<Vector> = gens.into_iter().map(|g| g.into_iter().take(n).chain(std::iter::repeat(rat(0))).take(n).collect()).collect();
        let seed = Subspace::span(n, &gens);
        let i = ideal_closure(&f.algebra, &seed).unwrap().ideal;
        prop_assert!(i.contains_subspace(&seed));
        prop_assert_eq!(&ideal_closure(&f.algebra, &i).unwrap().ideal, &i);
        let alg = &f.algebra.tp.algebra;
        for v in i.basis() {
            for k in 0..n {
                let e = unit_vec(n, k);
                prop_assert!(i.contains(&alg.mul(&e, v)));
                prop_assert!(i.contains(&alg.mul(v, &e)));
            }
        }
    }

    #[test]
    fn field_verdicts_depend_only_on_the_seed(seed in any::<u64>(), idx in 0usize..18) {
        let names = gallery::names();
        let f = gallery::fixture(&names[idx % names.len()]).unwrap();
        let alg = &f.algebra.tp.algebra;
        prop_assert_eq!(is_field(alg, seed, 4), is_field(alg, seed, 4));
    }
}
