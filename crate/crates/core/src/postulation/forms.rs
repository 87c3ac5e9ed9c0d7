//! Monomial bases and evaluation rows.

use std::collections::HashMap;

use crate::exact_linalg::{FieldMatrix, PrimeField};

pub type Exp = [u32; 4];

/// Monomials of one degree in `x0..x3`, in descending lexicographic order.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: u32,
    exps: Vec<Exp>,
    index: HashMap<Exp, usize>,
}

impl MonomialBasis {
    pub fn new(degree: u32) -> Self {
        let mut exps = Vec::new();
        for a in (0..=degree).rev() {
            for b in (0..=degree - a).rev() {
                for c in (0..=degree - a - b).rev() {
                    exps.push([a, b, c, degree - a - b - c]);
                }
            }
        }
        let index = exps.iter().enumerate().map(|(i, e)| (*e, i)).collect();
        MonomialBasis { degree, exps, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exps(&self) -> &[Exp] {
        &self.exps
    }

    pub fn index_of(&self, e: &Exp) -> Option<usize> {
        self.index.get(e).copied()
    }
}

fn powers(field: &PrimeField, x: u64, n: u32) -> Vec<u64> {
    let mut out = Vec::with_capacity(n as usize + 1);
    let mut acc = 1;
    for _ in 0..=n {
        out.push(acc);
        acc = field.mul(acc, x);
    }
    out
}

/// Values of every basis monomial at `p`.
pub fn eval_row(field: &PrimeField, basis: &MonomialBasis, p: &[u64; 4]) -> Vec<u64> {
    let pw: Vec<Vec<u64>> = p.iter().map(|&x| powers(field, x, basis.degree)).collect();
    basis
        .exps
        .iter()
        .map(|e| (0..4).fold(1, |acc, i| field.mul(acc, pw[i][e[i] as usize])))
        .collect()
}

/// Values of `d/dx_i` of every basis monomial at `p`.
pub fn partial_row(field: &PrimeField, basis: &MonomialBasis, p: &[u64; 4], i: usize) -> Vec<u64> {
    let pw: Vec<Vec<u64>> = p.iter().map(|&x| powers(field, x, basis.degree)).collect();
    basis
        .exps
        .iter()
        .map(|e| {
            if e[i] == 0 {
                return 0;
            }
            let mut v = field.reduce(e[i] as u64);
            for j in 0..4 {
                let k = if j == i { e[j] - 1 } else { e[j] };
                v = field.mul(v, pw[j][k as usize]);
            }
            v
        })
        .collect()
}

/// Dense polynomial over a monomial basis.
pub type Poly = Vec<u64>;

/// Product of a polynomial of degree `r` with a linear form `l = sum l_i x_i`.
pub fn times_linear(field: &PrimeField, from: &MonomialBasis, to: &MonomialBasis, f: &Poly, l: &[u64; 4]) -> Poly {
    let mut out = vec![0; to.len()];
    for (idx, e) in from.exps.iter().enumerate() {
        if f[idx] == 0 {
            continue;
        }
        for (i, &li) in l.iter().enumerate() {
            if li == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] += 1;
            let j = to.index_of(&e2).expect("degree matches");
            out[j] = field.add(out[j], field.mul(f[idx], li));
        }
    }
    out
}

/// Rows `m * f` for every monomial `m` of degree `to.degree - from.degree`.
pub fn multiples(from: &MonomialBasis, to: &MonomialBasis, f: &Poly, out: &mut FieldMatrix) {
    let shift = MonomialBasis::new(to.degree - from.degree);
    for m in shift.exps() {
        let mut row = vec![0; to.len()];
        for (idx, e) in from.exps.iter().enumerate() {
            if f[idx] == 0 {
                continue;
            }
            let e2 = [e[0] + m[0], e[1] + m[1], e[2] + m[2], e[3] + m[3]];
            row[to.index_of(&e2).expect("degree matches")] = f[idx];
        }
        out.push_row(&row);
    }
}

/// Bidegree `(a, b)` monomials `u^i v^(a-i) w^j z^(b-j)`, ordered by descending `i`, then `j`.
pub fn bidegree_index(a: u32, b: u32, i: u32, j: u32) -> usize {
    ((a - i) * (b + 1) + (b - j)) as usize
}

/// Restriction of degree-`s` forms to the quadric `x0 x3 = x1 x2` through
/// `x0 = uw, x1 = uz, x2 = vw, x3 = vz`, as a `(len, (s+1)^2)` matrix applied on the right.
pub fn restrict_to_quadric(field: &PrimeField, basis: &MonomialBasis, forms: &FieldMatrix) -> FieldMatrix {
    let s = basis.degree;
    let target = ((s + 1) * (s + 1)) as usize;
    let mut out = FieldMatrix::with_cols(*field, target);
    for r in 0..forms.rows() {
        let mut row = vec![0; target];
        for (idx, e) in basis.exps.iter().enumerate() {
            let c = forms.get(r, idx);
            if c == 0 {
                continue;
            }
            let (pu, pw) = (e[0] + e[1], e[0] + e[2]);
            let j = bidegree_index(s, s, pu, pw);
            row[j] = field.add(row[j], c);
        }
        out.push_row(&row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::binom3;

    #[test]
    fn basis_size_and_order() {
        for d in 0..8u32 {
            let b = MonomialBasis::new(d);
            assert_eq!(b.len() as i64, binom3(&(d as i64 + 3)));
        }
        let b = MonomialBasis::new(2);
        assert_eq!(b.exps()[0], [2, 0, 0, 0]);
        assert_eq!(b.exps()[1], [1, 1, 0, 0]);
        assert_eq!(*b.exps().last().unwrap(), [0, 0, 0, 2]);
    }

    #[test]
    fn euler_relation() {
        let f = PrimeField::new(101).unwrap();
        let b = MonomialBasis::new(3);
        let p = [3, 5, 7, 11];
        let val = eval_row(&f, &b, &p);
        let parts: Vec<Vec<u64>> = (0..4).map(|i| partial_row(&f, &b, &p, i)).collect();
        for c in 0..b.len() {
            let euler = (0..4).fold(0, |acc, i| f.add(acc, f.mul(p[i], parts[i][c])));
            assert_eq!(euler, f.mul(3, val[c]));
        }
    }
}
