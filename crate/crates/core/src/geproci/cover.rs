use crate::geometry::{ProjLine, ProjPoint};
use crate::klein::data;

/// Pairwise skew lines covering a point set (0-based line indices, ascending).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LineCover {
    pub lines: Vec<usize>,
    pub label: Option<char>,
}

/// The six tabulated covers of the 60 points by 10 of the 30 lines.
pub fn table_covers() -> Vec<LineCover> {
    data::COVERS.iter().map(|(c, ls)| LineCover { lines: data::indices(ls), label: Some(*c) }).collect()
}

/// The letter of the tabulated cover containing every line of `lines`, if any.
pub fn label_cover(lines: &[usize]) -> Option<char> {
    table_covers().into_iter().find(|c| lines.iter().all(|l| c.lines.contains(l))).and_then(|c| c.label)
}

pub(crate) struct CoverSearch<'a> {
    point_lines: Vec<Vec<usize>>,
    line_points: Vec<Vec<usize>>,
    skew: Vec<Vec<bool>>,
    size: usize,
    max_points: usize,
    accept: &'a mut dyn FnMut(&[usize]) -> bool,
}

impl CoverSearch<'_> {
    /// Returns true once `accept` asks to stop.
    fn run(&mut self, chosen: &mut Vec<usize>, covered: &mut [bool], uncovered: usize) -> bool {
        if uncovered == 0 {
            return chosen.len() == self.size && (self.accept)(chosen);
        }
        let left = self.size - chosen.len();
        if left == 0 || uncovered > left * self.max_points {
            return false;
        }
        let p = covered.iter().position(|c| !c).expect("some point uncovered");
        for &l in &self.point_lines[p].clone() {
            if !chosen.iter().all(|&c| self.skew[c][l]) {
                continue;
            }
            let pts = self.line_points[l].clone();
            if pts.iter().any(|&q| covered[q]) {
                continue;
            }
            for &q in &pts {
                covered[q] = true;
            }
            chosen.push(l);
            let stop = self.run(chosen, covered, uncovered - pts.len());
            chosen.pop();
            for &q in &pts {
                covered[q] = false;
            }
            if stop {
                return true;
            }
        }
        false
    }
}

/// Backtracking over covers of `points` by `size` pairwise skew lines; each
/// cover is passed to `accept` once (lines ascending), stopping when it returns true.
pub(crate) fn search_covers(
    lines: &[ProjLine],
    points: &[ProjPoint],
    size: usize,
    accept: &mut dyn FnMut(&[usize]) -> bool,
) {
    let line_points: Vec<Vec<usize>> =
        lines.iter().map(|l| (0..points.len()).filter(|&p| l.contains(&points[p])).collect()).collect();
    let mut point_lines = vec![Vec::new(); points.len()];
    for (l, ps) in line_points.iter().enumerate() {
        for &p in ps {
            point_lines[p].push(l);
        }
    }
    let skew = lines.iter().map(|a| lines.iter().map(|b| a.skew(b)).collect()).collect();
    let max_points = line_points.iter().map(Vec::len).max().unwrap_or(0);
    let mut search = CoverSearch { point_lines, line_points, skew, size, max_points, accept };
    let mut covered = vec![false; points.len()];
    search.run(&mut Vec::new(), &mut covered, points.len());
}

/// Every set of `size` pairwise skew lines whose incident points cover
/// `points` exactly, sorted. An empty point set yields the single empty cover.
pub fn disjoint_covers(lines: &[ProjLine], points: &[ProjPoint], size: usize) -> Vec<LineCover> {
    if points.is_empty() {
        return vec![LineCover { lines: Vec::new(), label: None }];
    }
    let mut out = Vec::new();
    search_covers(lines, points, size, &mut |c| {
        let mut lines = c.to_vec();
        lines.sort_unstable();
        out.push(LineCover { lines, label: None });
        false
    });
    out.sort();
    out
}
