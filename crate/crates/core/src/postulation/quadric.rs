//! The quadric `Q: x0 x3 = x1 x2` through `([u:v], [w:z]) -> [uw:uz:vw:vz]`.

use serde::{Deserialize, Serialize};

use super::forms::bidegree_index;
use super::{Fe, Ruling, P1};
use crate::error::{domain, Result};
use crate::exact_linalg::{FieldMatrix, PrimeField};

/// A point of `Q` in ruling coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QPoint {
    pub uv: P1,
    pub wz: P1,
}

fn red(field: &PrimeField, p: &P1) -> [u64; 2] {
    [field.reduce(p[0].0), field.reduce(p[1].0)]
}

pub fn segre(field: &PrimeField, q: &QPoint) -> [u64; 4] {
    let [u, v] = red(field, &q.uv);
    let [w, z] = red(field, &q.wz);
    [field.mul(u, w), field.mul(u, z), field.mul(v, w), field.mul(v, z)]
}

/// Two distinct points spanning a ruling line.
pub(crate) fn ruling_line_points(field: &PrimeField, family: Ruling, param: &P1) -> ([u64; 4], [u64; 4]) {
    let [a, b] = red(field, param);
    match family {
        Ruling::First => ([a, 0, b, 0], [0, a, 0, b]),
        Ruling::Second => ([a, b, 0, 0], [0, 0, a, b]),
    }
}

/// The point of a ruling line with the given coordinate on the other ruling.
pub fn ruling_point(family: Ruling, param: P1, other: P1) -> QPoint {
    match family {
        Ruling::First => QPoint { uv: param, wz: other },
        Ruling::Second => QPoint { uv: other, wz: param },
    }
}

/// Intersection of the first-ruling line `p1` with the second-ruling line `p2`.
pub fn node(p1: P1, p2: P1) -> QPoint {
    QPoint { uv: p1, wz: p2 }
}

fn on_line(field: &PrimeField, param: &P1, coord: &P1) -> bool {
    let [a, b] = red(field, param);
    let [x, y] = red(field, coord);
    field.mul(b, x) == field.mul(a, y)
}

/// Whether `q` lies on the line of `family` with parameter `param`.
pub fn lies_on(field: &PrimeField, family: Ruling, param: &P1, q: &QPoint) -> bool {
    match family {
        Ruling::First => on_line(field, param, &q.uv),
        Ruling::Second => on_line(field, param, &q.wz),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadricH0 {
    pub h0: usize,
    /// Indices of points absorbed by a grid line.
    pub absorbed: Vec<usize>,
    pub notes: Vec<String>,
}

/// Bidegree `(a, b)` forms on `Q` vanishing on the grid and the points.
///
/// The grid's equation factors out, leaving bidegree `(a-e, b-f)` forms
/// that vanish at the points off the grid.
pub fn h0_quadric(field: &PrimeField, points: &[QPoint], grid: (&[P1], &[P1]), bidegree: (u32, u32)) -> Result<QuadricH0> {
    let (g1, g2) = grid;
    let (a, b) = bidegree;
    if (g1.len() as u32) > a || (g2.len() as u32) > b {
        return Err(domain(format!("grid ({}, {}) does not fit in bidegree ({a}, {b})", g1.len(), g2.len())));
    }
    for p in g1.iter().chain(g2) {
        if red(field, p) == [0, 0] {
            return Err(domain("ruling parameter [0:0]"));
        }
    }
    let (ra, rb) = (a - g1.len() as u32, b - g2.len() as u32);
    let dim = ((ra + 1) * (rb + 1)) as usize;
    let mut rows = FieldMatrix::with_cols(*field, dim);
    let mut absorbed = Vec::new();
    let mut notes = Vec::new();
    for (idx, q) in points.iter().enumerate() {
        if red(field, &q.uv) == [0, 0] || red(field, &q.wz) == [0, 0] {
            return Err(domain(format!("point {idx} has a zero ruling coordinate")));
        }
        if g1.iter().any(|p| on_line(field, p, &q.uv)) || g2.iter().any(|p| on_line(field, p, &q.wz)) {
            absorbed.push(idx);
            notes.push(format!("point {idx} lies on a grid line; its condition is absorbed"));
            continue;
        }
        let [u, v] = red(field, &q.uv);
        let [w, z] = red(field, &q.wz);
        let mut row = vec![0; dim];
        for i in 0..=ra {
            for j in 0..=rb {
                let val = [field.pow(u, i as u64), field.pow(v, (ra - i) as u64), field.pow(w, j as u64), field.pow(z, (rb - j) as u64)]
                    .iter()
                    .fold(1, |acc, x| field.mul(acc, *x));
                row[bidegree_index(ra, rb, i, j)] = val;
            }
        }
        rows.push_row(&row);
    }
    Ok(QuadricH0 { h0: dim - rows.rank(), absorbed, notes })
}

/// Coordinates `[x0:x2]` / `[x0:x1]` of a point of `Q`, or `None` off `Q`.
pub fn ruling_coords(field: &PrimeField, x: &[u64; 4]) -> Option<QPoint> {
    if field.mul(x[0], x[3]) != field.mul(x[1], x[2]) || x.iter().all(|&c| c == 0) {
        return None;
    }
    let uv = if x[0] != 0 || x[2] != 0 { [x[0], x[2]] } else { [x[1], x[3]] };
    let wz = if x[0] != 0 || x[1] != 0 { [x[0], x[1]] } else { [x[2], x[3]] };
    Some(QPoint { uv: uv.map(Fe), wz: wz.map(Fe) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::postulation::seeded;

    fn p1(a: u64, b: u64) -> P1 {
        [Fe(a), Fe(b)]
    }

    #[test]
    fn segre_lands_on_quadric_and_inverts() {
        let f = PrimeField::default();
        let q = QPoint { uv: p1(3, 5), wz: p1(7, 11) };
        let x = segre(&f, &q);
        assert_eq!(f.mul(x[0], x[3]), f.mul(x[1], x[2]));
        let y = segre(&f, &ruling_coords(&f, &x).unwrap());
        // equal up to scale
        assert!((0..4).all(|i| (0..4).all(|j| f.mul(x[i], y[j]) == f.mul(x[j], y[i]))));
        assert!(ruling_coords(&f, &[1, 0, 0, 1]).is_none());
    }

    #[test]
    fn small_examples() {
        let f = PrimeField::default();
        let pts = [QPoint { uv: p1(1, 2), wz: p1(1, 3) }, QPoint { uv: p1(1, 5), wz: p1(1, 7) }];
        assert_eq!(h0_quadric(&f, &pts, (&[], &[]), (1, 0)).unwrap().h0, 0);
        assert_eq!(h0_quadric(&f, &[], (&[p1(1, 4)], &[p1(1, 6)]), (1, 1)).unwrap().h0, 1);
    }

    #[test]
    fn point_on_grid_is_absorbed() {
        let f = PrimeField::default();
        let q = QPoint { uv: p1(1, 4), wz: p1(1, 9) };
        let r = h0_quadric(&f, &[q], (&[p1(1, 4)], &[]), (2, 2)).unwrap();
        assert_eq!(r.absorbed, vec![0]);
        assert_eq!(r.h0, 2 * 3);
    }

    #[test]
    fn general_points_impose_independent_conditions() {
        let f = PrimeField::default();
        for (a, b, n) in [(2u32, 3u32, 5usize), (3, 3, 16), (4, 2, 20), (1, 1, 0)] {
            let mut rng = seeded(a as u64 * 10 + b as u64);
            let pts: Vec<QPoint> = (0..n)
                .map(|_| QPoint { uv: p1(1, f.random(&mut rng)), wz: p1(1, f.random(&mut rng)) })
                .collect();
            let expect = ((a + 1) * (b + 1)) as usize;
            assert_eq!(h0_quadric(&f, &pts, (&[], &[]), (a, b)).unwrap().h0, expect.saturating_sub(n));
        }
    }
}
