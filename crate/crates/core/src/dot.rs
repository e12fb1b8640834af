//! Riemenschneider dot diagrams.
//!
//! Row `i` holds `b_i - 1` dots and starts in the column of the last dot of
//! row `i - 1`. Column `j` then holds `a_j - 1` dots, where `[a_1, ..., a_e]`
//! is the dual chain. Rows and columns are 1-based throughout.

use std::fmt::Write as _;

use crate::chain::HjChain;
use crate::error::{Error, Result};
use crate::wahl;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DotRow {
    pub start_col: usize,
    pub len: usize,
}

impl DotRow {
    pub fn end_col(&self) -> usize {
        self.start_col + self.len - 1
    }
}

/// Move from one dot to the next in row-major order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    Down,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DotDiagram {
    rows: Vec<DotRow>,
    n_cols: usize,
    n_dots: usize,
}

/// Row and column of the symmetry centre of a class-W diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DeltaPosition {
    pub row: usize,
    pub col: usize,
}

impl DotDiagram {
    pub fn build(chain: &HjChain) -> DotDiagram {
        let mut rows = Vec::with_capacity(chain.len());
        let mut start_col = 1;
        for &b in chain.entries() {
            let row = DotRow {
                start_col,
                len: (b - 1) as usize,
            };
            start_col = row.end_col();
            rows.push(row);
        }
        let last = rows.last().expect("chains are nonempty");
        let n_cols = last.end_col();
        let n_dots = rows.iter().map(|r| r.len).sum();
        DotDiagram { rows, n_cols, n_dots }
    }

    pub fn rows(&self) -> &[DotRow] {
        &self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn n_dots(&self) -> usize {
        self.n_dots
    }

    pub fn contains(&self, row: usize, col: usize) -> bool {
        row >= 1
            && row <= self.rows.len()
            && (self.rows[row - 1].start_col..=self.rows[row - 1].end_col()).contains(&col)
    }

    /// All dots in row-major order.
    pub fn dots(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| (r.start_col..=r.end_col()).map(move |j| (i + 1, j)))
    }

    /// Number of dots in each column, left to right.
    pub fn column_counts(&self) -> Vec<usize> {
        let mut counts = vec![0; self.n_cols];
        for (_, j) in self.dots() {
            counts[j - 1] += 1;
        }
        counts
    }

    /// The middle dot in row-major order, if the dot count is odd.
    pub fn middle_dot(&self) -> Option<DeltaPosition> {
        if self.n_dots.is_multiple_of(2) {
            return None;
        }
        self.dots()
            .nth(self.n_dots / 2)
            .map(|(row, col)| DeltaPosition { row, col })
    }

    /// Unit steps between consecutive dots in row-major order.
    pub fn steps(&self) -> Vec<Step> {
        let dots: Vec<_> = self.dots().collect();
        dots.windows(2)
            .map(|w| if w[1].0 > w[0].0 { Step::Down } else { Step::Right })
            .collect()
    }

    /// Symmetry of a class-W diagram about `center`.
    ///
    /// The dots `k` places before and after the centre in row-major order
    /// are paired. The two neighbours of the centre sit in its own row; the
    /// outer pairs are "one above / one right" or "one left / one below",
    /// the two ways the class-W recursion adds dots. A single dot is
    /// symmetric about itself.
    pub fn is_symmetric_about(&self, center: DeltaPosition) -> bool {
        let Some(m) = self.dots().position(|d| d == (center.row, center.col)) else {
            return false;
        };
        if 2 * m + 1 != self.n_dots {
            return false;
        }
        if self.n_dots == 1 {
            return true;
        }
        let steps = self.steps();
        // steps[m-1] enters the centre, steps[m] leaves it
        if steps[m - 1] != Step::Right || steps[m] != Step::Right {
            return false;
        }
        (2..=m).all(|k| {
            let inward = steps[m - k];
            let outward = steps[m + k - 1];
            inward != outward
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.middle_dot().is_some_and(|c| self.is_symmetric_about(c))
    }

    /// Invariance of the dot set under `(i, j) -> (2 i_c - i, 2 j_c - j)`
    /// about the middle dot. Weaker notion than [`is_symmetric`]; it holds
    /// for `[3,2,3]` but fails for most class-W diagrams.
    ///
    /// [`is_symmetric`]: DotDiagram::is_symmetric
    pub fn is_point_symmetric(&self) -> bool {
        let Some(center) = self.middle_dot() else {
            return false;
        };
        self.dots().all(|(i, j)| {
            let (ri, rj) = (2 * center.row as i64 - i as i64, 2 * center.col as i64 - j as i64);
            ri >= 1 && rj >= 1 && self.contains(ri as usize, rj as usize)
        })
    }

    /// Row lengths left after removing every dot in the last column.
    /// Rows may become empty.
    pub fn without_last_column(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| if r.end_col() == self.n_cols { r.len - 1 } else { r.len })
            .collect()
    }

    /// One text row per diagram row: `o` for a dot, `@` for the marked dot,
    /// `.` for an empty cell.
    pub fn render(&self, mark: Option<DeltaPosition>) -> String {
        let mut out = String::new();
        for (i, r) in self.rows.iter().enumerate() {
            for j in 1..=self.n_cols {
                let c = if mark == Some(DeltaPosition { row: i + 1, col: j }) {
                    '@'
                } else if (r.start_col..=r.end_col()).contains(&j) {
                    'o'
                } else {
                    '.'
                };
                out.push(c);
            }
            out.push('\n');
        }
        out
    }
}

/// Chain read from column counts: entry `j` is the column's dot count plus one.
pub fn dual_from_diagram(diagram: &DotDiagram) -> HjChain {
    let entries = diagram.column_counts().into_iter().map(|c| c as i64 + 1).collect();
    HjChain::new(entries).expect("every column of a dot diagram holds a dot")
}

pub fn is_symmetric(diagram: &DotDiagram) -> bool {
    diagram.is_symmetric()
}

/// δ-position of a class-W chain: the middle dot of its diagram.
pub fn delta_position(chain: &HjChain) -> Result<DeltaPosition> {
    wahl::is_class_w(chain)?;
    DotDiagram::build(chain)
        .middle_dot()
        .ok_or_else(|| Error::NotClassW("even number of dots".into()))
}

/// δ-half chain `[b_1, ..., b_{i(δ)-1}, b']`, where row `i(δ)` is cut after
/// column `j(δ)`.
pub fn delta_half(chain: &HjChain) -> Result<HjChain> {
    let delta = delta_position(chain)?;
    let diagram = DotDiagram::build(chain);
    let row = diagram.rows()[delta.row - 1];
    let mut entries = chain.entries()[..delta.row - 1].to_vec();
    entries.push((delta.col - row.start_col + 2) as i64);
    HjChain::new(entries)
}

/// Text rendering used by `dot-render`; the δ-dot is marked when the chain
/// is of class W.
pub fn render_chain(chain: &HjChain) -> String {
    let diagram = DotDiagram::build(chain);
    let mark = delta_position(chain).ok();
    diagram.render(mark)
}

/// Compact summary `rows (s,l),...; C columns, D dots` for logs and reports.
pub fn describe(diagram: &DotDiagram) -> String {
    let mut s = String::from("rows ");
    for (k, r) in diagram.rows().iter().enumerate() {
        if k > 0 {
            s.push(',');
        }
        let _ = write!(s, "({},{})", r.start_col, r.len);
    }
    let _ = write!(s, "; {} columns, {} dots", diagram.n_cols(), diagram.n_dots());
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hj(v: &[i64]) -> HjChain {
        HjChain::new(v.to_vec()).unwrap()
    }

    fn rows(v: &[(usize, usize)]) -> Vec<DotRow> {
        v.iter().map(|&(start_col, len)| DotRow { start_col, len }).collect()
    }

    #[test]
    fn build_examples() {
        let d = DotDiagram::build(&hj(&[2, 2, 5, 4]));
        assert_eq!(d.rows(), rows(&[(1, 1), (1, 1), (1, 4), (4, 3)]).as_slice());
        assert_eq!((d.n_cols(), d.n_dots()), (6, 9));

        let d = DotDiagram::build(&hj(&[2]));
        assert_eq!(d.rows(), rows(&[(1, 1)]).as_slice());
        assert_eq!((d.n_cols(), d.n_dots()), (1, 1));

        let d = DotDiagram::build(&hj(&[4]));
        assert_eq!(d.rows(), rows(&[(1, 3)]).as_slice());
        assert_eq!((d.n_cols(), d.n_dots()), (3, 3));
    }

    #[test]
    fn dual_examples() {
        let f = |v: &[i64]| dual_from_diagram(&DotDiagram::build(&hj(v)));
        assert_eq!(f(&[2, 2, 5, 4]), hj(&[4, 2, 2, 3, 2, 2]));
        assert_eq!(f(&[2]), hj(&[2]));
        assert_eq!(f(&[4]), hj(&[2, 2, 2]));
    }

    #[test]
    fn symmetry_examples() {
        assert!(DotDiagram::build(&hj(&[2, 2, 5, 4])).is_symmetric());
        assert!(DotDiagram::build(&hj(&[2])).is_symmetric());
        assert!(!DotDiagram::build(&hj(&[2, 3])).is_symmetric());
        // even dot count
        assert!(!DotDiagram::build(&hj(&[3])).is_symmetric());
        // point symmetric only; 12/5 is not of class W
        assert!(!DotDiagram::build(&hj(&[3, 2, 3])).is_symmetric());
        assert!(DotDiagram::build(&hj(&[3, 2, 3])).is_point_symmetric());
        assert!(!DotDiagram::build(&hj(&[2, 2, 5, 4])).is_point_symmetric());
        assert!(DotDiagram::build(&hj(&[4])).is_point_symmetric());
        assert!(delta_position(&hj(&[3, 2, 3])).is_err());
    }

    #[test]
    fn steps_of_49_34() {
        use Step::*;
        let d = DotDiagram::build(&hj(&[2, 2, 5, 4]));
        assert_eq!(d.steps(), vec![Down, Down, Right, Right, Right, Down, Right, Right]);
        assert!(d.is_symmetric_about(DeltaPosition { row: 3, col: 3 }));
        assert!(!d.is_symmetric_about(DeltaPosition { row: 3, col: 2 }));
    }

    #[test]
    fn delta_position_examples() {
        assert_eq!(
            delta_position(&hj(&[2, 2, 5, 4])).unwrap(),
            DeltaPosition { row: 3, col: 3 }
        );
        assert_eq!(delta_position(&hj(&[4])).unwrap(), DeltaPosition { row: 1, col: 2 });
        let n = 5;
        let mut b = vec![n + 2];
        b.extend(std::iter::repeat_n(2, (n - 2) as usize));
        assert_eq!(
            delta_position(&hj(&b)).unwrap(),
            DeltaPosition {
                row: 1,
                col: n as usize
            }
        );
        assert!(matches!(delta_position(&hj(&[2, 3])), Err(Error::NotClassW(_))));
    }

    #[test]
    fn delta_half_examples() {
        assert_eq!(delta_half(&hj(&[2, 2, 5, 4])).unwrap(), hj(&[2, 2, 4]));
        assert_eq!(delta_half(&hj(&[2, 5])).unwrap(), hj(&[2, 3]));
        for n in 2..=50i64 {
            let mut b = vec![n + 2];
            b.extend(std::iter::repeat_n(2, (n - 2) as usize));
            assert_eq!(delta_half(&hj(&b)).unwrap(), hj(&[n + 1]), "n = {n}");
        }
        assert!(matches!(delta_half(&hj(&[2, 3])), Err(Error::NotClassW(_))));
    }

    #[test]
    fn render_matches_fixture() {
        let expected = "o.....\no.....\noo@o..\n...ooo\n";
        assert_eq!(render_chain(&hj(&[2, 2, 5, 4])), expected);
        assert_eq!(render_chain(&hj(&[2, 3])), "o.\noo\n");
    }

    #[test]
    fn last_column_removal() {
        let d = DotDiagram::build(&hj(&[2, 2, 5, 4]));
        assert_eq!(d.without_last_column(), vec![1, 1, 4, 2]);
        let d = DotDiagram::build(&hj(&[5, 2]));
        assert_eq!(d.without_last_column(), vec![3, 0]);
    }

    #[test]
    fn describe_format() {
        let d = DotDiagram::build(&hj(&[2, 2, 5, 4]));
        assert_eq!(describe(&d), "rows (1,1),(1,1),(1,4),(4,3); 6 columns, 9 dots");
    }
}
