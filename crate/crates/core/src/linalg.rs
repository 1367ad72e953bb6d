//! Exact integer matrices and their rank.

use std::fmt;

/// A dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    /// Builds a matrix from equal-length rows; `cols` fixes the width when `rows` is empty.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<i64>>) -> Self {
        let mut data = Vec::new();
        let mut n = 0;
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            data.extend(r);
            n += 1;
        }
        IntMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Rank over `Q`, by fraction-free elimination with content removal.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<i128>> = (0..self.rows)
            .map(|r| self.row(r).iter().map(|&v| v as i128).collect())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..m.len())
                .filter(|&r| m[r][col] != 0)
                .min_by_key(|&r| m[r][col].abs())
            else {
                continue;
            };
            m.swap(rank, p);
            let pivot = m[rank].clone();
            for row in m.iter_mut().skip(rank + 1) {
                let a = row[col];
                if a == 0 {
                    continue;
                }
                let g = gcd(pivot[col], a);
                let (sp, sa) = (pivot[col] / g, a / g);
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = *x * sp - y * sa;
                }
                let content = row.iter().fold(0, |acc, &v| gcd(acc, v));
                if content > 1 {
                    row.iter_mut().for_each(|v| *v /= content);
                }
            }
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let cells: Vec<String> = self.row(r).iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", cells.join("\t"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks() {
        assert_eq!(IntMatrix::zeros(3, 4).rank(), 0);
        let m = IntMatrix::from_rows(3, [vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let m = IntMatrix::from_rows(2, [vec![2, 3], vec![3, 5]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.transpose().rank(), 2);
    }
}
