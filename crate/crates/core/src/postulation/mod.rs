//! Hilbert functions of explicit subschemes of P^3 over a prime field.
//!
//! A [`SchemeSpec`] lists points, double points, lines, ruling lines and grids
//! of the quadric `x0 x3 = x1 x2`, and determinantal curves. Parameters left
//! out of the spec (grid rulings, curve matrices) are drawn from a seed.

mod forms;
mod horace;
mod quadric;

pub use forms::{MonomialBasis, Poly};
pub use horace::{horace_check, random_config, residual, GridNode, HoraceConfig, HoraceReport};
pub use quadric::{h0_quadric, node, ruling_point, segre, QPoint, QuadricH0};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{domain, Result};
use crate::exact_linalg::{FieldMatrix, PrimeField};
use forms::{eval_row, multiples, partial_row, times_linear};

/// Field element, serialized as a decimal string.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fe(pub u64);

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Fe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.trim().parse().map(Fe).map_err(serde::de::Error::custom)
    }
}

pub type P3 = [Fe; 4];
pub type P1 = [Fe; 2];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Ruling {
    /// Fixed `[u:v]`: the line `{[uw:uz:vw:vz]}`, bidegree (1,0).
    #[serde(rename = "1")]
    First,
    /// Fixed `[w:z]`, bidegree (0,1).
    #[serde(rename = "2")]
    Second,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Component {
    Point { coords: P3 },
    /// The scheme `(I_o)^2`: value and first partials vanish.
    DoublePoint { coords: P3 },
    Line { p: P3, q: P3 },
    RulingLine { family: Ruling, param: P1 },
    /// `e` first-ruling and `f` second-ruling lines of the quadric.
    Grid {
        e: usize,
        f: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params1: Option<Vec<P1>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        params2: Option<Vec<P1>>,
    },
    /// Maximal minors of a `t x (t+1)` matrix of linear forms; `matrix[i][j]` holds the four coefficients.
    DeterminantalCurve {
        t: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        matrix: Option<Vec<Vec<P3>>>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchemeSpec {
    pub components: Vec<Component>,
}

impl SchemeSpec {
    pub fn new(components: Vec<Component>) -> Self {
        SchemeSpec { components }
    }

    /// Fill in unset grid parameters and curve matrices from `rng`.
    pub fn realize(&self, field: &PrimeField, rng: &mut ChaCha8Rng) -> Result<SchemeSpec> {
        let mut out = Vec::with_capacity(self.components.len());
        let fe = |rng: &mut ChaCha8Rng| Fe(field.random(rng));
        for c in &self.components {
            out.push(match c {
                Component::Grid { e, f, params1, params2 } => {
                    let mut pick = |given: &Option<Vec<P1>>, n: usize| -> Result<Vec<P1>> {
                        match given {
                            Some(v) if v.len() == n => Ok(v.clone()),
                            Some(v) => Err(domain(format!("grid lists {} parameters for {n} lines", v.len()))),
                            None => Ok((0..n).map(|_| [Fe(1), fe(rng)]).collect()),
                        }
                    };
                    let p1 = pick(params1, *e)?;
                    let p2 = pick(params2, *f)?;
                    Component::Grid { e: *e, f: *f, params1: Some(p1), params2: Some(p2) }
                }
                Component::DeterminantalCurve { t, matrix } => {
                    let m = match matrix {
                        Some(m) => {
                            if m.len() != *t || m.iter().any(|r| r.len() != t + 1) {
                                return Err(domain(format!("curve matrix must be {t} x {}", t + 1)));
                            }
                            m.clone()
                        }
                        None => (0..*t).map(|_| (0..t + 1).map(|_| [fe(rng), fe(rng), fe(rng), fe(rng)]).collect()).collect(),
                    };
                    Component::DeterminantalCurve { t: *t, matrix: Some(m) }
                }
                other => other.clone(),
            });
        }
        Ok(SchemeSpec { components: out })
    }
}

/// Outcome of one `h0` computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct H0Result {
    pub h0: usize,
    /// The random specialization was degenerate; `h0` is not meaningful.
    pub inconclusive: bool,
    pub seed: u64,
    pub prime: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

pub(crate) fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn coords(field: &PrimeField, p: &P3) -> [u64; 4] {
    [field.reduce(p[0].0), field.reduce(p[1].0), field.reduce(p[2].0), field.reduce(p[3].0)]
}

fn is_zero(p: &[u64; 4]) -> bool {
    p.iter().all(|&x| x == 0)
}

fn proportional(field: &PrimeField, p: &[u64; 4], q: &[u64; 4]) -> bool {
    (0..4).all(|i| (0..4).all(|j| field.mul(p[i], q[j]) == field.mul(p[j], q[i])))
}

/// Maximal minors of a `t x (t+1)` matrix of linear forms, by Laplace expansion along rows.
pub fn maximal_minors(field: &PrimeField, matrix: &[Vec<[u64; 4]>]) -> Vec<Poly> {
    let t = matrix.len();
    let n = t + 1;
    let bases: Vec<MonomialBasis> = (0..=t as u32).map(MonomialBasis::new).collect();
    // minors[mask] = determinant of rows 0..popcount(mask) on the columns in `mask`
    let mut minors: std::collections::HashMap<u32, Poly> = std::collections::HashMap::new();
    minors.insert(0, vec![1]);
    for r in 0..t {
        let mut next = std::collections::HashMap::new();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != r + 1 {
                continue;
            }
            let mut acc = vec![0; bases[r + 1].len()];
            let mut sign_pos = true;
            for j in 0..n {
                if mask & (1 << j) == 0 {
                    continue;
                }
                let sub = &minors[&(mask & !(1 << j))];
                let term = times_linear(field, &bases[r], &bases[r + 1], sub, &matrix[r][j]);
                for (a, b) in acc.iter_mut().zip(&term) {
                    *a = if sign_pos { field.add(*a, *b) } else { field.sub(*a, *b) };
                }
                sign_pos = !sign_pos;
            }
            next.insert(mask, acc);
        }
        minors = next;
    }
    let full = (1u32 << n) - 1;
    (0..n).map(|j| minors[&(full & !(1 << j))].clone()).collect()
}

/// Rows spanning the degree-`s` piece of one curve's ideal, and whether the minors were independent.
fn curve_piece(field: &PrimeField, matrix: &[Vec<P3>], s: u32) -> (FieldMatrix, bool) {
    let t = matrix.len() as u32;
    let m: Vec<Vec<[u64; 4]>> = matrix.iter().map(|r| r.iter().map(|p| coords(field, p)).collect()).collect();
    let minors = maximal_minors(field, &m);
    let from = MonomialBasis::new(t);
    let generic = FieldMatrix::from_rows(*field, from.len(), &minors).rank() == minors.len();
    let to = MonomialBasis::new(s);
    let mut rows = FieldMatrix::with_cols(*field, to.len());
    for f in &minors {
        multiples(&from, &to, f, &mut rows);
    }
    (rows, generic)
}

/// Linear conditions imposed on degree-`s` forms by the non-curve components.
fn conditions(field: &PrimeField, basis: &MonomialBasis, comp: &Component, rows: &mut FieldMatrix) -> Result<bool> {
    let s = basis.degree() as u64;
    let mut generic = true;
    let mut line = |p: [u64; 4], q: [u64; 4], rows: &mut FieldMatrix| {
        if proportional(field, &p, &q) {
            generic = false;
            return;
        }
        // s+1 distinct points p + lambda q, lambda = 0..s, and q itself for the last one
        for lambda in 0..s {
            let pt = [0, 1, 2, 3].map(|i| field.add(p[i], field.mul(lambda, q[i])));
            rows.push_row(&eval_row(field, basis, &pt));
        }
        rows.push_row(&eval_row(field, basis, &q));
    };
    match comp {
        Component::Point { coords: c } => {
            let p = coords(field, c);
            if is_zero(&p) {
                return Err(domain("point with all coordinates zero"));
            }
            rows.push_row(&eval_row(field, basis, &p));
        }
        Component::DoublePoint { coords: c } => {
            let p = coords(field, c);
            if is_zero(&p) {
                return Err(domain("double point with all coordinates zero"));
            }
            rows.push_row(&eval_row(field, basis, &p));
            for i in 0..4 {
                rows.push_row(&partial_row(field, basis, &p, i));
            }
        }
        Component::Line { p, q } => line(coords(field, p), coords(field, q), rows),
        Component::RulingLine { family, param } => {
            let (a, b) = quadric::ruling_line_points(field, *family, param);
            line(a, b, rows)
        }
        Component::Grid { params1, params2, .. } => {
            for p in params1.as_deref().unwrap_or_default() {
                let (a, b) = quadric::ruling_line_points(field, Ruling::First, p);
                line(a, b, rows);
            }
            for p in params2.as_deref().unwrap_or_default() {
                let (a, b) = quadric::ruling_line_points(field, Ruling::Second, p);
                line(a, b, rows);
            }
        }
        Component::DeterminantalCurve { .. } => {}
    }
    Ok(generic)
}

/// Basis (as rows over [`MonomialBasis::new(s)`]) of degree-`s` forms vanishing on `z`.
///
/// Components with unset parameters are realized from `seed` first. A curve
/// whose generation degree exceeds `s` contributes the zero space.
pub fn ideal_piece(z: &SchemeSpec, s: u32, field: &PrimeField, seed: u64) -> Result<(FieldMatrix, bool)> {
    let z = z.realize(field, &mut seeded(seed))?;
    let basis = MonomialBasis::new(s);
    let mut space: Option<FieldMatrix> = None;
    let mut generic = true;
    for c in &z.components {
        if let Component::DeterminantalCurve { matrix: Some(m), .. } = c {
            let piece = if m.len() as u32 > s {
                FieldMatrix::with_cols(*field, basis.len())
            } else {
                let (piece, ok) = curve_piece(field, m, s);
                generic &= ok;
                piece
            };
            space = Some(match space {
                None => piece.row_space(),
                Some(prev) => prev.intersect_row_spaces(&piece),
            });
        }
    }
    let space = space.unwrap_or_else(|| FieldMatrix::identity(*field, basis.len()));
    let mut cond = FieldMatrix::with_cols(*field, basis.len());
    for c in &z.components {
        generic &= conditions(field, &basis, c, &mut cond)?;
    }
    if cond.rows() == 0 || space.rows() == 0 {
        return Ok((space, generic));
    }
    // forms y * space with (y * space) . cond_j = 0 for every condition j
    let pairing = space.mul_transpose(&cond);
    let y = pairing.transpose().kernel();
    Ok((y.mul(&space), generic))
}

/// `h^0(I_Z(s))`.
pub fn h0_ideal(z: &SchemeSpec, s: u32, field: &PrimeField, seed: u64) -> Result<H0Result> {
    let (piece, generic) = ideal_piece(z, s, field, seed)?;
    let mut notes = Vec::new();
    for c in &z.components {
        if let Component::DeterminantalCurve { t, .. } = c {
            if *t as u32 > s {
                notes.push(format!("degree {s} is below the generation degree {t} of a curve; its ideal is zero there"));
            }
        }
    }
    Ok(H0Result { h0: piece.rows(), inconclusive: !generic, seed, prime: field.modulus(), notes })
}

/// [`h0_ideal`] retried on `seed, seed+1, seed+2` until the specialization is not degenerate.
pub fn h0_ideal_retry(z: &SchemeSpec, s: u32, field: &PrimeField, seed: u64) -> Result<H0Result> {
    let mut last = None;
    for k in 0..3 {
        let r = h0_ideal(z, s, field, seed + k)?;
        if !r.inconclusive {
            return Ok(r);
        }
        last = Some(r);
    }
    Ok(last.expect("three attempts were made"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn pt(c: [u64; 4]) -> P3 {
        c.map(Fe)
    }

    #[test]
    fn single_point_in_degree_one() {
        let z = SchemeSpec::new(vec![Component::Point { coords: pt([1, 2, 3, 4]) }]);
        assert_eq!(h0_ideal(&z, 1, &f(), 0).unwrap().h0, 3);
    }

    #[test]
    fn twisted_cubic_counts() {
        let z = SchemeSpec::new(vec![Component::DeterminantalCurve { t: 2, matrix: None }]);
        assert_eq!(h0_ideal(&z, 2, &f(), 1).unwrap().h0, 3);
        let low = h0_ideal(&z, 1, &f(), 1).unwrap();
        assert_eq!(low.h0, 0);
        assert!(!low.notes.is_empty());
    }

    #[test]
    fn twisted_cubic_and_line() {
        let z = SchemeSpec::new(vec![
            Component::DeterminantalCurve { t: 2, matrix: None },
            Component::Line { p: pt([1, 5, 2, 9]), q: pt([7, 1, 8, 3]) },
        ]);
        for seed in 0..3 {
            assert_eq!(h0_ideal(&z, 2, &f(), seed).unwrap().h0, 0);
        }
    }

    #[test]
    fn double_point_imposes_four() {
        let z = SchemeSpec::new(vec![Component::DoublePoint { coords: pt([2, 3, 5, 7]) }]);
        for s in 1..5u32 {
            let n = ((s + 3) * (s + 2) * (s + 1) / 6) as usize;
            assert_eq!(h0_ideal(&z, s, &f(), 0).unwrap().h0, n - 4);
        }
    }

    #[test]
    fn line_conditions_match_its_ideal() {
        // the line x2 = x3 = 0 as a degenerate curve: 1 x 2 matrix (x2, x3)
        let ideal = SchemeSpec::new(vec![Component::DeterminantalCurve {
            t: 1,
            matrix: Some(vec![vec![pt([0, 0, 1, 0]), pt([0, 0, 0, 1])]]),
        }]);
        let by_points = SchemeSpec::new(vec![Component::Line { p: pt([1, 0, 0, 0]), q: pt([0, 1, 0, 0]) }]);
        for s in 1..6 {
            let (a, _) = ideal_piece(&ideal, s, &f(), 0).unwrap();
            let (b, _) = ideal_piece(&by_points, s, &f(), 0).unwrap();
            assert_eq!(a.rows(), b.rows());
            assert_eq!(a.intersect_row_spaces(&b).rows(), a.rows());
        }
    }

    #[test]
    fn degenerate_line_is_inconclusive() {
        let z = SchemeSpec::new(vec![Component::Line { p: pt([1, 2, 3, 4]), q: pt([2, 4, 6, 8]) }]);
        assert!(h0_ideal(&z, 2, &f(), 0).unwrap().inconclusive);
    }

    #[test]
    fn json_round_trip() {
        let z = SchemeSpec::new(vec![
            Component::Point { coords: pt([1, 2, 3, 4]) },
            Component::RulingLine { family: Ruling::Second, param: [Fe(1), Fe(9)] },
            Component::Grid { e: 1, f: 2, params1: None, params2: None },
            Component::DeterminantalCurve { t: 2, matrix: None },
        ]);
        let text = serde_json::to_string(&z).unwrap();
        assert!(text.contains("\"coords\":[\"1\",\"2\",\"3\",\"4\"]"));
        let back: SchemeSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, z);
    }
}
