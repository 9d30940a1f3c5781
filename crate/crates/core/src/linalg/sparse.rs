use super::field::Arith;
use crate::par::{self, Execution};

pub type SparseRow<E> = Vec<(usize, E)>;

/// Incremental row echelon form over sparse rows.
///
/// Each stored row has its pivot as leading (smallest) column, normalized to
/// one. Rows are reduced only by leading entries, which keeps fill-in low for
/// the Kronecker-structured systems this is used on.
pub struct SparseEchelon<'a, A: Arith> {
    ar: &'a A,
    ncols: usize,
    pivots: Vec<Option<SparseRow<A::E>>>,
    rank: usize,
}

impl<'a, A: Arith> SparseEchelon<'a, A> {
    pub fn new(ar: &'a A, ncols: usize) -> Self {
        SparseEchelon {
            ar,
            ncols,
            pivots: (0..ncols).map(|_| None).collect(),
            rank: 0,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.rank
    }

    /// Add a row (sorted by column, no explicit zeros). Returns whether it
    /// increased the rank.
    pub fn insert(&mut self, mut row: SparseRow<A::E>) -> bool {
        let ar = self.ar;
        loop {
            let Some((lead, val)) = row.first().cloned() else {
                return false;
            };
            match &self.pivots[lead] {
                Some(piv) => row = axpy(ar, &row, &ar.neg(&val), piv),
                None => {
                    let inv = ar.inv(&val);
                    let normalized = row
                        .into_iter()
                        .map(|(c, v)| (c, ar.mul(&v, &inv)))
                        .collect();
                    self.pivots[lead] = Some(normalized);
                    self.rank += 1;
                    return true;
                }
            }
        }
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|&c| self.pivots[c].is_none())
            .collect()
    }

    /// Kernel basis: one vector per free column, equal to one there and zero
    /// on the other free columns.
    pub fn kernel(&self, exec: Execution) -> Vec<Vec<A::E>> {
        let free = self.free_columns();
        let ar = self.ar;
        par::map(exec, &free, |&f| {
            let mut x = vec![ar.zero(); self.ncols];
            x[f] = ar.one();
            for p in (0..self.ncols).rev() {
                if let Some(row) = &self.pivots[p] {
                    let mut s = ar.zero();
                    for (c, v) in &row[1..] {
                        if !ar.is_zero(&x[*c]) {
                            s = ar.add(&s, &ar.mul(v, &x[*c]));
                        }
                    }
                    x[p] = ar.neg(&s);
                }
            }
            x
        })
    }
}

/// `a + k·b` for sorted sparse rows.
pub fn axpy<A: Arith>(
    ar: &A,
    a: &SparseRow<A::E>,
    k: &A::E,
    b: &SparseRow<A::E>,
) -> SparseRow<A::E> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |x| x.0);
        let cb = b.get(j).map_or(usize::MAX, |x| x.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            let v = ar.mul(k, &b[j].1);
            if !ar.is_zero(&v) {
                out.push((cb, v));
            }
            j += 1;
        } else {
            let v = ar.add(&a[i].1, &ar.mul(k, &b[j].1));
            if !ar.is_zero(&v) {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}
