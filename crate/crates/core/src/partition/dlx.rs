//! Dancing-links exact cover (Algorithm X).
//!
//! Column choice is "fewest remaining rows first", ties to the lowest column
//! index; rows within a column are tried in the order they were added. The
//! first solution found is returned, so results are reproducible.

const ROOT: usize = 0;

pub struct ExactCover {
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    column: Vec<usize>,
    row_of: Vec<usize>,
    size: Vec<usize>,
    solution: Vec<usize>,
    nodes_visited: u64,
}

impl ExactCover {
    /// `rows[r]` lists the (distinct) columns row `r` covers.
    pub fn new(columns: usize, rows: &[Vec<usize>]) -> Self {
        let headers = columns + 1;
        let mut dlx = ExactCover {
            left: Vec::with_capacity(headers),
            right: Vec::with_capacity(headers),
            up: Vec::with_capacity(headers),
            down: Vec::with_capacity(headers),
            column: Vec::with_capacity(headers),
            row_of: Vec::with_capacity(headers),
            size: vec![0; headers],
            solution: Vec::new(),
            nodes_visited: 0,
        };
        for h in 0..headers {
            dlx.left.push(if h == 0 { columns } else { h - 1 });
            dlx.right.push(if h == columns { 0 } else { h + 1 });
            dlx.up.push(h);
            dlx.down.push(h);
            dlx.column.push(h);
            dlx.row_of.push(usize::MAX);
        }
        for (r, cols) in rows.iter().enumerate() {
            let mut first: Option<usize> = None;
            for &c in cols {
                let h = c + 1;
                let node = dlx.left.len();
                let last = dlx.up[h];
                dlx.up.push(last);
                dlx.down.push(h);
                dlx.down[last] = node;
                dlx.up[h] = node;
                dlx.column.push(h);
                dlx.row_of.push(r);
                dlx.size[h] += 1;
                match first {
                    None => {
                        dlx.left.push(node);
                        dlx.right.push(node);
                        first = Some(node);
                    }
                    Some(f) => {
                        let tail = dlx.left[f];
                        dlx.left.push(tail);
                        dlx.right.push(f);
                        dlx.right[tail] = node;
                        dlx.left[f] = node;
                    }
                }
            }
        }
        dlx
    }

    fn cover(&mut self, c: usize) {
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[c];
        while i != c {
            let mut j = self.right[i];
            while j != i {
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = d;
                self.up[d] = u;
                self.size[self.column[j]] -= 1;
                j = self.right[j];
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, c: usize) {
        let mut i = self.up[c];
        while i != c {
            let mut j = self.left[i];
            while j != i {
                let col = self.column[j];
                self.size[col] += 1;
                let (u, d) = (self.up[j], self.down[j]);
                self.down[u] = j;
                self.up[d] = j;
                j = self.left[j];
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[c], self.right[c]);
        self.right[l] = c;
        self.left[r] = c;
    }

    /// Rows of the first exact cover found, in selection order.
    pub fn solve_first(&mut self) -> Option<Vec<usize>> {
        self.solution.clear();
        if self.search() {
            Some(self.solution.clone())
        } else {
            None
        }
    }

    /// Search nodes expanded by the last `solve_first`.
    pub fn nodes_visited(&self) -> u64 {
        self.nodes_visited
    }

    fn search(&mut self) -> bool {
        if self.right[ROOT] == ROOT {
            return true;
        }
        self.nodes_visited += 1;
        let mut best = self.right[ROOT];
        let mut c = self.right[best];
        while c != ROOT {
            if self.size[c] < self.size[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.size[best] == 0 {
            return false;
        }
        self.cover(best);
        let mut r = self.down[best];
        while r != best {
            self.solution.push(self.row_of[r]);
            let mut j = self.right[r];
            while j != r {
                self.cover(self.column[j]);
                j = self.right[j];
            }
            if self.search() {
                return true;
            }
            let mut j = self.left[r];
            while j != r {
                self.uncover(self.column[j]);
                j = self.left[j];
            }
            self.solution.pop();
            r = self.down[r];
        }
        self.uncover(best);
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        // Knuth's 7-column example; unique solution rows {0, 3, 4}
        let rows = vec![
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ];
        let mut dlx = ExactCover::new(7, &rows);
        let mut sol = dlx.solve_first().unwrap();
        sol.sort();
        assert_eq!(sol, vec![0, 3, 4]);
    }

    #[test]
    fn infeasible_and_empty() {
        let mut dlx = ExactCover::new(2, &[vec![0], vec![0, 1]]);
        assert_eq!(dlx.solve_first(), Some(vec![1]));
        let mut dlx = ExactCover::new(2, &[vec![0]]);
        assert_eq!(dlx.solve_first(), None);
        let mut dlx = ExactCover::new(0, &[]);
        assert_eq!(dlx.solve_first(), Some(vec![]));
    }
}
