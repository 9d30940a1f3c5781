//! Cartan matrices, Bourbaki node order.
//!
//! Entry `[a][b]` is `2(α_a|α_b)/(α_b|α_b)`, so row `a` is the simple root
//! `α_a` written in fundamental-weight coordinates.
//!
//! ```text
//! A_l   1 - 2 - ... - (l-1) - l
//! B_l   1 - 2 - ... - (l-1) => l        (l short)
//! C_l   1 - 2 - ... - (l-1) <= l        (l long, others short)
//! D_l   1 - 2 - ... - (l-2) - (l-1)
//!                       |
//!                       l
//! E_l   1 - 3 - 4 - 5 - ... - l
//!               |
//!               2
//! F4    1 - 2 => 3 - 4                  (3, 4 short)
//! G2    1 <= 2                          (1 short)
//! ```

use super::{Family, SimpleType};

pub fn cartan_matrix(t: SimpleType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut a = vec![vec![0i64; l]; l];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family() {
        Family::A | Family::B | Family::C => {
            for i in 1..l {
                link(i - 1, i);
            }
        }
        Family::D => {
            for i in 1..l - 1 {
                link(i - 1, i);
            }
            link(l - 3, l - 1);
        }
        Family::E6 | Family::E7 | Family::E8 => {
            link(0, 2);
            link(2, 3);
            link(1, 3);
            for i in 4..l {
                link(i - 1, i);
            }
        }
        Family::F4 => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G2 => {
            link(0, 1);
        }
    }
    match t.family() {
        Family::B if l >= 2 => a[l - 2][l - 1] = -2,
        Family::C if l >= 2 => a[l - 1][l - 2] = -2,
        Family::F4 => a[1][2] = -2,
        Family::G2 => a[1][0] = -3,
        _ => {}
    }
    a
}
