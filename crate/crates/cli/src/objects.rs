//! Conversions between validated structure files and the core types.

use zinbiel::algebra::{Algebra, Bimodule};
use zinbiel::cohomology::Cochain;
use zinbiel::crossed::CrossedModule;
use zinbiel::dendriform::{RotaBaxter2, TwoTermAinf, TwoTermDend};
use zinbiel::two_vect::Zinbiel2;
use zinbiel::zinf::{TwoTerm, TwoTermZinf, ZinfMorphism};
use zinbiel::{Error, Q};

use crate::format::{Kind, Structure};

/// A file of the wrong kind, or contents the core constructors reject.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct Mismatch(pub String);

type Result<T> = std::result::Result<T, Mismatch>;

fn expect(s: &Structure, kinds: &[Kind]) -> Result<()> {
    if kinds.contains(&s.kind) {
        Ok(())
    } else {
        let want: Vec<String> = kinds.iter().map(ToString::to_string).collect();
        Err(Mismatch(format!("expected a file of kind {}, got {}", want.join(" or "), s.kind)))
    }
}

fn core(e: Error) -> Mismatch {
    Mismatch(e.to_string())
}

pub fn algebra(s: &Structure) -> Result<Algebra<Q>> {
    expect(s, &[Kind::Algebra, Kind::Bimodule])?;
    Algebra::with_labels(s.tensor("product").clone(), s.labels_for("A")).map_err(core)
}

pub fn bimodule(s: &Structure) -> Result<(Algebra<Q>, Bimodule<Q>)> {
    expect(s, &[Kind::Bimodule])?;
    let v = Bimodule::new(s.tensor("left").clone(), s.tensor("right").clone()).map_err(core)?;
    Ok((algebra(s)?, v))
}

pub fn zinf(s: &Structure) -> Result<TwoTermZinf<Q>> {
    expect(s, &[Kind::Zinf])?;
    let t = |n: &str| s.tensor(n).clone();
    TwoTerm::new(s.matrix("d"), t("l2_00"), t("l2_01"), t("l2_10"), t("l3")).map_err(core)
}

pub fn ainf(s: &Structure) -> Result<TwoTermAinf<Q>> {
    expect(s, &[Kind::Ainf, Kind::Rb])?;
    let t = |n: &str| s.tensor(n).clone();
    TwoTerm::new(s.matrix("d"), t("m2_00"), t("m2_01"), t("m2_10"), t("m3")).map_err(core)
}

pub fn rota_baxter(s: &Structure) -> Result<(TwoTermAinf<Q>, RotaBaxter2<Q>)> {
    expect(s, &[Kind::Rb])?;
    let r = RotaBaxter2::new(s.matrix("r0"), s.matrix("r1")).map_err(core)?;
    Ok((ainf(s)?, r))
}

pub fn dend(s: &Structure) -> Result<TwoTermDend<Q>> {
    expect(s, &[Kind::Dend])?;
    let t = |n: &str| s.tensor(n).clone();
    TwoTermDend::new(
        s.matrix("d"),
        [[t("prec_00"), t("prec_01"), t("prec_10")], [t("succ_00"), t("succ_01"), t("succ_10")]],
        [t("mu3_1"), t("mu3_2"), t("mu3_3")],
    )
    .map_err(core)
}

pub fn crossed(s: &Structure) -> Result<CrossedModule<Q>> {
    expect(s, &[Kind::Crossed, Kind::Extension])?;
    let g = Algebra::with_labels(s.tensor("g_product").clone(), s.labels_for("G")).map_err(core)?;
    let h = Algebra::with_labels(s.tensor("h_product").clone(), s.labels_for("H")).map_err(core)?;
    let action = Bimodule::new(s.tensor("left").clone(), s.tensor("right").clone()).map_err(core)?;
    CrossedModule::new(g, h, s.matrix("phi"), action).map_err(core)
}

pub fn cochain(s: &Structure) -> Result<Cochain<Q>> {
    expect(s, &[Kind::Cochain])?;
    Cochain::new(s.tensor("map").clone()).map_err(core)
}

pub fn morphism(s: &Structure) -> Result<ZinfMorphism<Q>> {
    expect(s, &[Kind::Morphism])?;
    ZinfMorphism::new(s.matrix("f0"), s.matrix("f1"), s.tensor("f2").clone()).map_err(core)
}

pub fn zinbiel2(s: &Structure) -> Result<Zinbiel2<Q>> {
    expect(s, &[Kind::Zinbiel2])?;
    Zinbiel2::new(
        s.matrix("source"),
        s.matrix("target"),
        s.matrix("unit"),
        s.tensor("object_product").clone(),
        s.tensor("morphism_product").clone(),
        s.tensor("zinbielator").clone(),
    )
    .map_err(core)
}

pub fn from_algebra(a: &Algebra<Q>) -> Structure {
    Structure::new(Kind::Algebra)
        .with_dim("A", a.dim())
        .with_tensor("product", a.product().clone())
        .with_labels("A", a.labels())
}

pub fn from_bimodule(a: &Algebra<Q>, v: &Bimodule<Q>) -> Structure {
    let mut s = from_algebra(a)
        .with_dim("V", v.module_dim())
        .with_tensor("left", v.left().clone())
        .with_tensor("right", v.right().clone());
    s.kind = Kind::Bimodule;
    s
}

fn two_term(kind: Kind, l: &TwoTerm<Q>, names: [&str; 5]) -> Structure {
    Structure::new(kind)
        .with_dim("V0", l.dim0())
        .with_dim("V1", l.dim1())
        .with_matrix(names[0], l.d())
        .with_tensor(names[1], l.l2_00().clone())
        .with_tensor(names[2], l.l2_01().clone())
        .with_tensor(names[3], l.l2_10().clone())
        .with_tensor(names[4], l.l3().clone())
}

pub fn from_zinf(l: &TwoTermZinf<Q>) -> Structure {
    two_term(Kind::Zinf, l, ["d", "l2_00", "l2_01", "l2_10", "l3"])
}

pub fn from_ainf(a: &TwoTermAinf<Q>) -> Structure {
    two_term(Kind::Ainf, a, ["d", "m2_00", "m2_01", "m2_10", "m3"])
}

pub fn from_dend(dd: &TwoTermDend<Q>) -> Structure {
    let (n0, n1) = dd.d().shape();
    let mut s = Structure::new(Kind::Dend).with_dim("V0", n0).with_dim("V1", n1).with_matrix("d", dd.d());
    for (r, cell) in [(1, "prec"), (2, "succ")] {
        for (c, part) in ["00", "01", "10"].iter().enumerate() {
            s = s.with_tensor(&format!("{cell}_{part}"), dd.mu2(r)[c].clone());
        }
    }
    for r in 1..=3 {
        s = s.with_tensor(&format!("mu3_{r}"), dd.mu3(r).clone());
    }
    s
}

pub fn from_crossed(x: &CrossedModule<Q>) -> Structure {
    Structure::new(Kind::Crossed)
        .with_dim("G", x.g.dim())
        .with_dim("H", x.h.dim())
        .with_tensor("g_product", x.g.product().clone())
        .with_tensor("h_product", x.h.product().clone())
        .with_matrix("phi", &x.phi)
        .with_tensor("left", x.action.left().clone())
        .with_tensor("right", x.action.right().clone())
        .with_labels("G", x.g.labels())
        .with_labels("H", x.h.labels())
}

pub fn from_cochain(w: &Cochain<Q>) -> Structure {
    let mut s = Structure::new(Kind::Cochain)
        .with_dim("Z", w.algebra_dim())
        .with_dim("M", w.module_dim())
        .with_tensor("map", w.map().clone());
    s.degree = Some(w.degree());
    s
}

pub fn from_zinbiel2(z: &Zinbiel2<Q>) -> Structure {
    Structure::new(Kind::Zinbiel2)
        .with_dim("objects", z.object_dim())
        .with_dim("morphisms", z.morphism_dim())
        .with_matrix("source", z.source_map())
        .with_matrix("target", z.target_map())
        .with_matrix("unit", z.unit_map())
        .with_tensor("object_product", z.object_product().clone())
        .with_tensor("morphism_product", z.morphism_product().clone())
        .with_tensor("zinbielator", z.zinbielator_table().clone())
}
