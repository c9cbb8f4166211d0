//! Smith normal form over the integers, tracking the column transform.
//!
//! Only the column transform is needed: if `P * M * Q = D` then `x -> x * Q`
//! maps the row lattice of `M` onto the row lattice of `D`, which is what
//! the quotient construction uses to produce explicit coset coordinates.

pub(crate) struct Smith {
    /// Diagonal entries, `d[i] | d[i + 1]`, length `min(rows, cols)`; zeros
    /// for rank deficiency.
    pub diagonal: Vec<i128>,
    /// Column transform, `cols x cols`, unimodular.
    pub q: Vec<Vec<i128>>,
}

pub(crate) fn smith(mut a: Vec<Vec<i128>>, cols: usize) -> Smith {
    let rows = a.len();
    let mut q: Vec<Vec<i128>> = (0..cols)
        .map(|i| (0..cols).map(|j| i128::from(i == j)).collect())
        .collect();
    let mut diagonal = Vec::new();

    let col_op = |a: &mut Vec<Vec<i128>>, q: &mut Vec<Vec<i128>>, dst: usize, src: usize, f: i128| {
        for row in a.iter_mut() {
            row[dst] -= f * row[src];
        }
        for row in q.iter_mut() {
            row[dst] -= f * row[src];
        }
    };
    let col_swap = |a: &mut Vec<Vec<i128>>, q: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in a.iter_mut() {
            row.swap(x, y);
        }
        for row in q.iter_mut() {
            row.swap(x, y);
        }
    };

    for t in 0..rows.min(cols) {
        loop {
            // smallest nonzero entry in the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            col_swap(&mut a, &mut q, t, pj);

            let p = a[t][t];
            let mut dirty = false;
            for i in t + 1..rows {
                let f = a[i][t] / p;
                if f != 0 {
                    for j in t..cols {
                        a[i][j] -= f * a[t][j];
                    }
                }
                dirty |= a[i][t] != 0;
            }
            for j in t + 1..cols {
                let f = a[t][j] / p;
                if f != 0 {
                    col_op(&mut a, &mut q, j, t, f);
                }
                dirty |= a[t][j] != 0;
            }
            if dirty {
                continue;
            }
            // pivot must divide the rest of the block
            let mut offender = None;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if a[i][j] % p != 0 {
                        offender = Some(i);
                        break 'scan;
                    }
                }
            }
            match offender {
                Some(i) => {
                    for j in t..cols {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for j in t..cols {
                a[t][j] = -a[t][j];
            }
        }
        diagonal.push(a[t][t]);
    }
    Smith { diagonal, q }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat_mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let m = b[0].len();
        a.iter()
            .map(|row| {
                (0..m)
                    .map(|j| row.iter().zip(b).map(|(x, brow)| x * brow[j]).sum())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn diagonal_of_z6_z2() {
        let s = smith(vec![vec![6, 0], vec![0, 2]], 2);
        assert_eq!(s.diagonal, vec![2, 6]);
    }

    #[test]
    fn transformed_lattice_is_diagonal() {
        // rows: 4 e1, 6 e2, (2, 3)
        let m = vec![vec![4, 0], vec![0, 6], vec![2, 3]];
        let s = smith(m.clone(), 2);
        let mq = mat_mul(&m, &s.q);
        // every transformed relation lies in the diagonal lattice
        for row in &mq {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x % s.diagonal[j], 0, "{row:?} vs {:?}", s.diagonal);
            }
        }
        assert_eq!(s.diagonal.iter().product::<i128>(), 12);
    }
}
