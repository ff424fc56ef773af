//! Example structures, built programmatically.

use crate::actions::{LeftComoduleAlgebra, RightModule, RightModuleCoalgebra};
use crate::dk::{self, DkDatum};
use crate::error::{Error, Result};
use crate::format::{Structure, Workspace};
use crate::kernel::{kernel_basis, vector, Field, Matrix, Scalar, Tensor};
use crate::structures::{Algebra, Bialgebra, Coalgebra, HopfAlgebra};
use crate::yd::{self, YdDatum};

/// A finite group by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    pub names: Vec<String>,
    /// `table[a][b]` is the index of `ab`.
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

impl GroupTable {
    /// Validates closure, associativity, identity and inverses.
    pub fn new(names: Vec<String>, table: Vec<Vec<usize>>) -> Result<GroupTable> {
        let n = names.len();
        let bad = |m: &str| Error::AxiomViolation { what: "group table".into(), detail: m.into() };
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(bad("table is not an n×n table of element indices"));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| bad("no identity"))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == identity) {
                return Err(bad("an element has no inverse"));
            }
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(bad("not associative"));
                    }
                }
            }
        }
        Ok(GroupTable { names, table, identity })
    }

    pub fn cyclic(n: usize) -> GroupTable {
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g{i}"),
            })
            .collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        GroupTable { names, table, identity: 0 }
    }

    pub fn trivial() -> GroupTable {
        GroupTable::cyclic(1)
    }

    /// Permutations of three letters in lexicographic order, `(pq)(i) = p(q(i))`.
    pub fn symmetric3() -> GroupTable {
        let mut perms = Vec::new();
        for a in 0..3 {
            for b in 0..3 {
                for c in 0..3 {
                    if a != b && b != c && a != c {
                        perms.push([a, b, c]);
                    }
                }
            }
        }
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        let names = perms.iter().map(|p| format!("[{}{}{}]", p[0], p[1], p[2])).collect();
        GroupTable { names, table, identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.order()).find(|&b| self.table[a][b] == self.identity).expect("validated")
    }
}

fn hopf(basis: Vec<String>, mult: Tensor, unit: Vec<Scalar>, comult: Tensor, counit: Vec<Scalar>, s: Matrix) -> Result<HopfAlgebra> {
    let a = Algebra::new(basis.clone(), mult, unit)?;
    let c = Coalgebra::new(basis, comult, counit)?;
    HopfAlgebra::new(Bialgebra::new(a, c)?, s)
}

/// `kG` with `Δg = g⊗g`, `ε(g) = 1`, `S(g) = g⁻¹`.
pub fn group_algebra(g: &GroupTable, field: Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    let mut comult = Tensor::zeros(field, &[n, n, n]);
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        for b in 0..n {
            mult.set(&[a, b, g.table[a][b]], field.one());
        }
        comult.set(&[a, a, a], field.one());
        s.set(g.inverse(a), a, field.one());
    }
    hopf(g.names.clone(), mult, field.unit_vector(n, g.identity), comult, vec![field.one(); n], s)
}

/// Functions on `G` in the basis of point masses `δ_g`.
pub fn dual_group_algebra(g: &GroupTable, field: Field) -> Result<HopfAlgebra> {
    let n = g.order();
    let mut mult = Tensor::zeros(field, &[n, n, n]);
    let mut comult = Tensor::zeros(field, &[n, n, n]);
    let mut s = Matrix::zeros(field, n, n);
    for a in 0..n {
        mult.set(&[a, a, a], field.one());
        for b in 0..n {
            comult.set(&[g.table[a][b], a, b], field.one());
        }
        s.set(g.inverse(a), a, field.one());
    }
    let names = g.names.iter().map(|x| format!("d{x}")).collect();
    hopf(names, mult, vec![field.one(); n], comult, field.unit_vector(n, g.identity), s)
}

/// Sweedler's four-dimensional algebra on `1, g, x, gx` with `g² = 1`,
/// `x² = 0`, `xg = −gx`, `Δx = x⊗1 + g⊗x`.
pub fn sweedler_h4(field: Field) -> Result<HopfAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::Precondition("H4 needs characteristic other than 2".into()));
    }
    let mut mult = Tensor::zeros(field, &[4, 4, 4]);
    for i in 0..4 {
        for j in 0..4 {
            let (a, b) = (i % 2, i / 2);
            let (c, d) = (j % 2, j / 2);
            if b + d >= 2 {
                continue;
            }
            let sign = if b * c == 1 { -1 } else { 1 };
            mult.set(&[i, j, (a + c) % 2 + 2 * (b + d)], field.from_i64(sign));
        }
    }
    let mut comult = Tensor::zeros(field, &[4, 4, 4]);
    let one = field.one();
    comult.set(&[0, 0, 0], one.clone());
    comult.set(&[1, 1, 1], one.clone());
    comult.set(&[2, 2, 0], one.clone());
    comult.set(&[2, 1, 2], one.clone());
    comult.set(&[3, 3, 1], one.clone());
    comult.set(&[3, 0, 3], one.clone());
    let s = Matrix::from_i64(field, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    let basis = ["1", "g", "x", "gx"].iter().map(|s| s.to_string()).collect();
    hopf(basis, mult, field.vector(&[1, 0, 0, 0]), comult, field.vector(&[1, 1, 0, 0]), s)
}

/// The `n×n` comatrix coalgebra: `Δc_ij = Σ_u c_iu ⊗ c_uj`, `ε(c_ij) = δ_ij`;
/// `c_ij` has index `i·n + j`.
pub fn comatrix_coalgebra(n: usize, field: Field) -> Coalgebra {
    let d = n * n;
    let mut t = Tensor::zeros(field, &[d, d, d]);
    let mut eps = field.zeros(d);
    let mut names = Vec::new();
    for i in 0..n {
        for j in 0..n {
            names.push(format!("c{}{}", i + 1, j + 1));
            for u in 0..n {
                t.set(&[i * n + j, i * n + u, u * n + j], field.one());
            }
        }
        eps[i * n + i] = field.one();
    }
    Coalgebra::new(names, t, eps).expect("comatrix coalgebra")
}

/// `kX` with `Δx = x⊗x`, `ε(x) = 1`.
pub fn grouplike_coalgebra(n: usize, field: Field) -> Coalgebra {
    let mut t = Tensor::zeros(field, &[n, n, n]);
    for i in 0..n {
        t.set(&[i, i, i], field.one());
    }
    let names = (0..n).map(|i| format!("x{}", i + 1)).collect();
    Coalgebra::new(names, t, vec![field.one(); n]).expect("grouplike coalgebra")
}

/// `γ(c_ij)(c_rs) = δ_is μ_rj` with scalar `μ`, for data with `A = k`.
pub fn comatrix_gamma(mu: &Matrix) -> Tensor {
    let n = mu.rows();
    let field = mu.field();
    let d = n * n;
    let mut t = Tensor::zeros(field, &[d, d, 1]);
    for i in 0..n {
        for j in 0..n {
            for r in 0..n {
                t.set(&[i * n + j, r * n + i, 0], mu.get(r, j).clone());
            }
        }
    }
    t
}

/// `γ(x)(y) = δ_xy μ_xy` with scalar `μ`, for data whose algebra has unit
/// `unit`.
pub fn grouplike_gamma(mu: &Matrix, unit: &[Scalar]) -> Tensor {
    let n = mu.rows();
    let mut t = Tensor::zeros(mu.field(), &[n, n, unit.len()]);
    for x in 0..n {
        for (k, u) in vector::nonzero(unit) {
            t.set(&[x, x, k], mu.get(x, x) * u);
        }
    }
    t
}

/// A left integral `θ ∈ H*`, `Σ h₁θ(h₂) = θ(h)1`, normalized to `θ(1) = 1`
/// when possible.
pub fn classical_integral(h: &HopfAlgebra) -> Option<Vec<Scalar>> {
    let d = h.dim();
    let field = h.field();
    let mut sys = Matrix::zeros(field, d * d, d);
    for i in 0..d {
        for (p, q, x) in h.terms(i) {
            for k in 0..d {
                let c = &h.basis_vector(p)[k] * x;
                if !c.is_zero() {
                    sys.add_at(i * d + k, q, &c);
                }
            }
        }
        for (k, u) in vector::nonzero(h.unit()) {
            sys.add_at(i * d + k, i, &-u);
        }
    }
    let kb = kernel_basis(&sys);
    if kb.cols() == 0 {
        return None;
    }
    let theta = kb.column(0);
    let t1 = vector::dot(&theta, h.unit());
    Some(match t1.inv() {
        Some(inv) => vector::scale(&theta, &inv),
        None => theta,
    })
}

/// One named example.
#[derive(Clone, Copy, Debug)]
pub struct GalleryEntry {
    pub name: &'static str,
    pub kind: &'static str,
    pub description: &'static str,
    /// Expected properties, as `(property, value)` pairs.
    pub properties: &'static [(&'static str, &'static str)],
}

const ENTRIES: &[GalleryEntry] = &[
    GalleryEntry { name: "k", kind: "hopf", description: "the ground field", properties: &[("cosemisimple", "yes")] },
    GalleryEntry { name: "kC2", kind: "hopf", description: "group algebra of C2", properties: &[("cosemisimple", "yes")] },
    GalleryEntry { name: "kC3", kind: "hopf", description: "group algebra of C3", properties: &[("cosemisimple", "yes")] },
    GalleryEntry { name: "kS3", kind: "hopf", description: "group algebra of S3", properties: &[("cosemisimple", "yes")] },
    GalleryEntry { name: "kC2_dual", kind: "hopf", description: "functions on C2", properties: &[("cosemisimple", "iff char ≠ 2")] },
    GalleryEntry { name: "kC3_dual", kind: "hopf", description: "functions on C3", properties: &[("cosemisimple", "iff char ≠ 3")] },
    GalleryEntry { name: "kS3_dual", kind: "hopf", description: "functions on S3", properties: &[("cosemisimple", "iff char ∤ 6")] },
    GalleryEntry { name: "H4", kind: "hopf", description: "Sweedler's algebra (char ≠ 2)", properties: &[("cosemisimple", "no"), ("S^2 = Id", "no")] },
    GalleryEntry { name: "M1", kind: "coalgebra", description: "1×1 comatrix coalgebra", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "M2", kind: "coalgebra", description: "2×2 comatrix coalgebra", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "M3", kind: "coalgebra", description: "3×3 comatrix coalgebra", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "kX1", kind: "coalgebra", description: "grouplike coalgebra on 1 point", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "kX2", kind: "coalgebra", description: "grouplike coalgebra on 2 points", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "kX3", kind: "coalgebra", description: "grouplike coalgebra on 3 points", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "kX4", kind: "coalgebra", description: "grouplike coalgebra on 4 points", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "kX5", kind: "coalgebra", description: "grouplike coalgebra on 5 points", properties: &[("coseparable", "yes")] },
    GalleryEntry { name: "comatrix2", kind: "dk_datum", description: "(k, k, M2)", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "comatrix3", kind: "dk_datum", description: "(k, k, M3)", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "kx2", kind: "dk_datum", description: "(k, k, kX2)", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "kx_c2", kind: "dk_datum", description: "(kC2, kC2, kX2), C2 swapping the two points, ρ = Δ", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "kc2_dual_coalgebra", kind: "dk_datum", description: "(k, k, C) with C the coalgebra of functions on C2", properties: &[("total integral", "iff char ≠ 2")] },
    GalleryEntry { name: "kc2_regular", kind: "dk_datum", description: "(kC2, kC2, kC2), ρ = Δ, C acted on by multiplication", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "h4_regular", kind: "dk_datum", description: "(H4, H4, H4), ρ = Δ, C acted on by multiplication", properties: &[("total integral", "yes")] },
    GalleryEntry { name: "k_trivial", kind: "yd_datum", description: "H = A = k", properties: &[("galois", "yes")] },
    GalleryEntry { name: "kc2_delta_delta", kind: "yd_datum", description: "H = A = kC2, ρ^l = ρ^r = Δ", properties: &[("galois", "no"), ("dim B", "2")] },
    GalleryEntry { name: "kc2_delta_trivial", kind: "yd_datum", description: "H = A = kC2, ρ^l = Δ, trivial ρ^r", properties: &[("galois", "yes"), ("dim B", "1")] },
    GalleryEntry { name: "h4_delta_delta", kind: "yd_datum", description: "H = A = H4, ρ^l = ρ^r = Δ", properties: &[("galois", "no"), ("dim B", "2")] },
    GalleryEntry { name: "h4_delta_trivial", kind: "yd_datum", description: "H = A = H4, ρ^l = Δ, trivial ρ^r", properties: &[("galois", "yes"), ("dim B", "1")] },
];

pub fn entries() -> &'static [GalleryEntry] {
    ENTRIES
}

pub fn entry(name: &str) -> Option<&'static GalleryEntry> {
    ENTRIES.iter().find(|e| e.name == name)
}

/// The Hopf algebra entries by name.
pub fn hopf_by_name(name: &str, field: Field) -> Result<HopfAlgebra> {
    match name {
        "k" => Ok(HopfAlgebra::ground(field)),
        "kC2" => group_algebra(&GroupTable::cyclic(2), field),
        "kC3" => group_algebra(&GroupTable::cyclic(3), field),
        "kS3" => group_algebra(&GroupTable::symmetric3(), field),
        "kC2_dual" => dual_group_algebra(&GroupTable::cyclic(2), field),
        "kC3_dual" => dual_group_algebra(&GroupTable::cyclic(3), field),
        "kS3_dual" => dual_group_algebra(&GroupTable::symmetric3(), field),
        "H4" => sweedler_h4(field),
        _ => Err(Error::UnknownReference(name.to_string())),
    }
}

pub fn coalgebra_by_name(name: &str, field: Field) -> Result<Coalgebra> {
    let n = |s: &str| s.parse::<usize>().map_err(|_| Error::UnknownReference(name.to_string()));
    if let Some(k) = name.strip_prefix("kX") {
        return Ok(grouplike_coalgebra(n(k)?, field));
    }
    if let Some(k) = name.strip_prefix('M') {
        return Ok(comatrix_coalgebra(n(k)?, field));
    }
    Err(Error::UnknownReference(name.to_string()))
}

/// `(kC2, kC2, kX2)` with `x·g = y`.
pub fn kx_c2_datum(field: Field) -> Result<DkDatum> {
    let h = group_algebra(&GroupTable::cyclic(2), field)?;
    let c = grouplike_coalgebra(2, field);
    let mut act = Tensor::zeros(field, &[2, 2, 2]);
    for x in 0..2 {
        for g in 0..2 {
            act.set(&[x, g, (x + g) % 2], field.one());
        }
    }
    let cm = RightModuleCoalgebra::new(&h, c, act)?;
    let a = LeftComoduleAlgebra::regular(&h);
    DkDatum::new(h, a, cm)
}

pub fn dk_by_name(name: &str, field: Field) -> Result<DkDatum> {
    match name {
        "comatrix2" => Ok(dk::coalgebra_datum(&comatrix_coalgebra(2, field))),
        "comatrix3" => Ok(dk::coalgebra_datum(&comatrix_coalgebra(3, field))),
        "kx2" => Ok(dk::coalgebra_datum(&grouplike_coalgebra(2, field))),
        "kx_c2" => kx_c2_datum(field),
        "kc2_dual_coalgebra" => {
            let h = dual_group_algebra(&GroupTable::cyclic(2), field)?;
            Ok(dk::coalgebra_datum(&h.coalgebra().clone().renamed(vec!["d1".into(), "dg".into()])))
        }
        "kc2_regular" => Ok(DkDatum::regular(&group_algebra(&GroupTable::cyclic(2), field)?)),
        "h4_regular" => Ok(DkDatum::regular(&sweedler_h4(field)?)),
        _ => Err(Error::UnknownReference(name.to_string())),
    }
}

pub fn yd_by_name(name: &str, field: Field) -> Result<YdDatum> {
    match name {
        "k_trivial" => Ok(YdDatum::regular(&HopfAlgebra::ground(field))),
        "kc2_delta_delta" => Ok(YdDatum::regular(&group_algebra(&GroupTable::cyclic(2), field)?)),
        "kc2_delta_trivial" => Ok(YdDatum::regular_left(&group_algebra(&GroupTable::cyclic(2), field)?)),
        "h4_delta_delta" => Ok(YdDatum::regular(&sweedler_h4(field)?)),
        "h4_delta_trivial" => Ok(YdDatum::regular_left(&sweedler_h4(field)?)),
        _ => Err(Error::UnknownReference(name.to_string())),
    }
}

/// A gallery entry as a workspace: the named structure together with every
/// component it refers to, plus a few modules for data.
pub fn build(name: &str, field: Field) -> Result<Workspace> {
    let e = entry(name).ok_or_else(|| Error::UnknownReference(name.to_string()))?;
    let mut w = Workspace::new(field);
    match e.kind {
        "hopf" => w.push(name, Structure::Hopf(hopf_by_name(name, field)?)),
        "coalgebra" => w.push(name, Structure::Coalgebra(coalgebra_by_name(name, field)?)),
        "dk_datum" => {
            let d = dk_by_name(name, field)?;
            let ca = dk::induce(&d, &RightModule::regular(&d.algebra.algebra));
            let ck = dk::induce(&d, &trivial_a_module(&d));
            w.push("H", Structure::Hopf(d.hopf.clone()));
            w.push("A", Structure::ComoduleAlgebra { over: "H".into(), value: d.algebra.clone() });
            w.push("C", Structure::ModuleCoalgebra { over: "H".into(), value: d.coalgebra.clone() });
            w.push(name, Structure::DkDatum { hopf: "H".into(), algebra: "A".into(), coalgebra: "C".into(), value: d });
            w.push("CA", Structure::DkModule { datum: name.into(), value: ca });
            w.push("Ck", Structure::DkModule { datum: name.into(), value: ck });
        }
        "yd_datum" => {
            let d = yd_by_name(name, field)?;
            let v = yd::verma(&d);
            let ha = yd::h_tensor_a(&d);
            w.push("H", Structure::Hopf(d.hopf.clone()));
            w.push("A", Structure::BicomoduleAlgebra { over: "H".into(), value: d.algebra.clone() });
            w.push(name, Structure::YdDatum { hopf: "H".into(), algebra: "A".into(), value: d });
            w.push("verma", Structure::YdModule { datum: name.into(), value: v });
            w.push("HA", Structure::YdModule { datum: name.into(), value: ha });
        }
        _ => unreachable!("entry kinds are fixed"),
    }
    Ok(w)
}

/// The ground field as a right `A`-module: `A = k` itself, or the counit
/// when `A = H`.
fn trivial_a_module(d: &DkDatum) -> RightModule {
    let a = &d.algebra.algebra;
    if a.dim() == 1 {
        return RightModule::regular(a);
    }
    RightModule::trivial(d.field(), d.hopf.counit())
}

/// A right module from one action matrix per basis element of the algebra.
pub fn module_from_matrices(field: Field, basis: Vec<String>, mats: &[Matrix]) -> Result<RightModule> {
    let d = basis.len();
    let mut t = Tensor::zeros(field, &[d, mats.len(), d]);
    for (j, m) in mats.iter().enumerate() {
        if m.rows() != d || m.cols() != d {
            return Err(crate::error::dim_err("action matrices must be square of the module dimension"));
        }
        for i in 0..d {
            for (k, x) in vector::nonzero(&m.column(i)) {
                t.set(&[i, j, k], x.clone());
            }
        }
    }
    RightModule::new(basis, t, mats.len())
}
