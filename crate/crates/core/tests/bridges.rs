use zinbiel::algebra::{check_zinbiel, regular_bimodule, truncated_shuffle, Algebra};
use zinbiel::cohomology::random_cocycle;
use zinbiel::crossed::{strict_from_crossed, CrossedModule};
use zinbiel::dendriform::{
    check_ainf, check_cinf, check_rota_baxter, dendrify, search_shift_operators, symmetrize_zinf, totalize,
    zinf_from_rb, RotaBaxter2,
};
use zinbiel::fixtures::{nilpotent_plane, idempotent_homotopy, top_extension};
use zinbiel::linalg::Matrix;
use zinbiel::tensor::{input_tuples, Tensor};
use zinbiel::zinf::{check_zinf, skeletal_from_cocycle, TwoTerm, TwoTermZinf};
use zinbiel::Q;

const LOW: [&str; 7] = ["b1", "b2", "c", "d", "e1", "e2", "e3"];

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

fn lift(a: &Algebra<Q>) -> TwoTermZinf<Q> {
    strict_from_crossed(&CrossedModule::zero_map(a, zinbiel::algebra::Bimodule::zero(a.dim(), 0)).unwrap()).unwrap()
}

fn strict_fixtures() -> Vec<TwoTermZinf<Q>> {
    let mut out: Vec<TwoTermZinf<Q>> = (1..=4).map(|n| lift(&truncated_shuffle(n))).collect();
    out.push(lift(&nilpotent_plane()));
    out.push(strict_from_crossed(&CrossedModule::identity(&nilpotent_plane())).unwrap());
    out.push(strict_from_crossed(&top_extension(&truncated_shuffle(3))).unwrap());
    out
}

fn skeletal_fixtures() -> Vec<TwoTermZinf<Q>> {
    let mut out = Vec::new();
    for a in [nilpotent_plane::<Q>(), truncated_shuffle(3)] {
        let v = regular_bimodule(&a).unwrap();
        for seed in 0..3 {
            out.push(skeletal_from_cocycle(&a, &v, &random_cocycle(&a, &v, 3, seed).unwrap()).unwrap());
        }
    }
    out
}

#[test]
fn strict_structures_symmetrize_and_totalize() {
    for l in strict_fixtures() {
        assert!(check_zinf(&l).pass());
        let c = check_cinf(&symmetrize_zinf(&l));
        assert!(c.pass(), "{}", c.summary());
        let t = check_ainf(&totalize(&dendrify(&l)));
        assert!(t.pass(), "{}", t.summary());
    }
}

#[test]
fn totalization_doubles_the_symmetrization() {
    for l in strict_fixtures().into_iter().chain(skeletal_fixtures()) {
        let s = symmetrize_zinf(&l);
        let t = totalize(&dendrify(&l));
        let two = q(2);
        assert_eq!(t.l2_00(), &s.l2_00().scale(&two));
        assert_eq!(t.l2_01(), &s.l2_01().scale(&two));
        assert_eq!(t.l2_10(), &s.l2_10().scale(&two));
    }
}

#[test]
fn skeletal_symmetrizations_satisfy_the_low_conditions() {
    for l in skeletal_fixtures() {
        let r = check_cinf(&symmetrize_zinf(&l));
        for id in LOW.iter().chain(&["commutative-00", "commutative-01", "symmetric-m3"]) {
            assert!(r.holds(id), "{id}");
        }
    }
}

#[test]
fn symmetrization_of_a_non_skeletal_structure_can_fail() {
    let l = idempotent_homotopy::<Q>();
    assert!(check_zinf(&l).pass());
    let r = check_ainf(&symmetrize_zinf(&l));
    assert_eq!(r.failing(), vec!["d", "e1", "e2", "e3", "f"]);
    let v = &r.get("d").unwrap().violations[0];
    assert_eq!((v.tuple.clone(), v.residual.clone()), (vec![0, 0, 0], vec![q(1)]));
}

#[test]
fn dendrified_cells_permute_l3() {
    for l in skeletal_fixtures() {
        let dd = dendrify(&l);
        let n = l.dim0();
        for t in input_tuples(&[n, n, n]) {
            assert_eq!(dd.mu3(1).fiber(&t), l.l3().fiber(&t));
            assert_eq!(dd.mu3(2).fiber(&t), l.l3().fiber(&[t[1], t[2], t[0]]));
            assert_eq!(dd.mu3(3).fiber(&t), l.l3().fiber(&[t[2], t[0], t[1]]));
        }
        assert_eq!(dd.mu2(1)[0], *l.l2_00());
        assert_eq!(dd.mu2(2)[0], l.l2_00().permute_inputs(&[1, 0]));
    }
}

#[test]
fn searched_operator_on_symmetrized_shuffle() {
    let a = symmetrize_zinf(&lift(&truncated_shuffle(3)));
    let found = search_shift_operators(&a, &[-1, 0, 1]);
    assert!(!found.is_empty());
    for r in &found {
        assert!(check_rota_baxter(r, &a).unwrap().pass());
        let l = zinf_from_rb(&a, r).unwrap();
        assert!(check_zinf(&l).pass());
        let product = Algebra::new(l.l2_00().clone()).unwrap();
        assert!(check_zinbiel(&product).pass());
    }
    let id = RotaBaxter2::new(Matrix::identity(3), Matrix::identity(0)).unwrap();
    assert!(!check_rota_baxter(&id, &a).unwrap().pass());
    assert!(zinf_from_rb(&a, &id).is_err());
}

/// `V₀ = span(e₁, e₂)` with zero product, `V₁ = span(h)`, `d = 0` and a
/// symmetric `m₃` vanishing at `(e₂, e₂, e₂)`; `R₀ e₁ = e₂`, `R₀ e₂ = 0`,
/// `R₁ = 0`.
fn homotopy_fixture() -> (TwoTerm<Q>, RotaBaxter2<Q>) {
    let values = [(vec![0, 0, 0], 1), (vec![0, 0, 1], -2), (vec![0, 1, 1], 3)];
    let mut m3 = Tensor::zeros(&[2, 2, 2, 1]);
    for (idx, c) in values {
        for p in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            m3.set(&[idx[p[0]], idx[p[1]], idx[p[2]], 0], q(c));
        }
    }
    let a = TwoTerm::zero(2, 1).with_l3(m3).unwrap();
    let r0 = Matrix::from_i64(2, 2, &[0, 0, 1, 0]);
    (a, RotaBaxter2::new(r0, Matrix::zeros(1, 1)).unwrap())
}

#[test]
fn operator_induced_homotopy_structure() {
    let (a, r) = homotopy_fixture();
    assert!(check_cinf(&a).pass());
    assert!(check_rota_baxter(&r, &a).unwrap().pass());
    let l = zinf_from_rb(&a, &r).unwrap();
    assert!(!l.is_strict());
    assert_eq!(l.l3().get(&[0, 0, 0, 0]), &q(9));
    let rep = check_zinf(&l);
    for id in LOW {
        assert!(rep.holds(id), "{id}");
    }
}

#[test]
fn zero_inputs_give_zero_outputs() {
    let a = TwoTerm::<Q>::zero(3, 2);
    assert_eq!(symmetrize_zinf(&a), a);
    assert_eq!(totalize(&dendrify(&a)), a);
    assert_eq!(zinf_from_rb(&a, &RotaBaxter2::zero(3, 2)).unwrap(), a);
    assert!(check_ainf(&a).pass() && check_cinf(&a).pass());
}
