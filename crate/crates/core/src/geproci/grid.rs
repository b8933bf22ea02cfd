use super::cover::search_covers;
use crate::error::{Error, Result};
use crate::geometry::{ProjLine, ProjPoint};
use crate::klein::{collinear_structure, CollinearSet};

/// An (a,b)-grid: `a` skew lines with `b` points each, crossed by `b` skew
/// lines with `a` points each.
#[derive(Clone, Debug)]
pub struct GridStructure {
    pub a: usize,
    pub b: usize,
    /// The ruling of `a` lines first; lines sorted by their point indices.
    pub rulings: [Vec<CollinearSet>; 2],
}

/// Checks the grid invariants for two rulings and a point set.
pub fn verify_grid(points: &[ProjPoint], first: &[ProjLine], second: &[ProjLine]) -> Result<()> {
    for (name, ruling) in [("first", first), ("second", second)] {
        for (i, l) in ruling.iter().enumerate() {
            if let Some(j) = ruling[..i].iter().position(|m| !l.skew(m)) {
                return Err(Error::Identity(format!("lines {} and {} of the {name} ruling meet", j + 1, i + 1)));
            }
        }
    }
    let mut crossings = Vec::new();
    for (i, l) in first.iter().enumerate() {
        for (j, m) in second.iter().enumerate() {
            let x = l.intersection(m).ok_or_else(|| {
                Error::Identity(format!("line {} of the first ruling misses line {} of the second", i + 1, j + 1))
            })?;
            crossings.push(x);
        }
    }
    let all_listed = crossings.iter().all(|x| points.contains(x));
    let all_hit = points.iter().all(|p| crossings.contains(p));
    if !(all_listed && all_hit && crossings.len() == points.len()) {
        return Err(Error::Identity("the crossings differ from the point set".into()));
    }
    Ok(())
}

fn sorted(mut sets: Vec<CollinearSet>) -> Vec<CollinearSet> {
    sets.sort_by(|x, y| x.points.cmp(&y.points));
    sets
}

/// Searches every factorization `|Z| = a*b` (2 <= a <= b, a ascending) for a
/// grid structure; `None` certifies that there is none.
pub fn grid_check(points: &[ProjPoint]) -> Option<GridStructure> {
    let n = points.len();
    if n < 4 {
        return None;
    }
    let sets = collinear_structure(points);
    for a in (2..).take_while(|a| a * a <= n).filter(|a| n.is_multiple_of(*a)) {
        let b = n / a;
        let long: Vec<&CollinearSet> = sets.iter().filter(|s| s.points.len() == b).collect();
        if long.len() < a {
            continue;
        }
        let short: Vec<&CollinearSet> = sets.iter().filter(|s| s.points.len() == a).collect();
        let long_lines: Vec<ProjLine> = long.iter().map(|s| s.line.clone()).collect();
        let mut found = None;
        search_covers(&long_lines, points, a, &mut |first| {
            // lines of the second ruling meet every first-ruling line in a point of the set
            let candidates: Vec<&CollinearSet> = short
                .iter()
                .copied()
                .filter(|s| first.iter().all(|&f| s.points.iter().filter(|p| long[f].points.contains(p)).count() == 1))
                .collect();
            let cand_lines: Vec<ProjLine> = candidates.iter().map(|s| s.line.clone()).collect();
            let mut second = None;
            search_covers(&cand_lines, points, b, &mut |c| {
                let r1: Vec<ProjLine> = first.iter().map(|&f| long[f].line.clone()).collect();
                let r2: Vec<ProjLine> = c.iter().map(|&s| cand_lines[s].clone()).collect();
                if verify_grid(points, &r1, &r2).is_ok() {
                    second = Some(c.iter().map(|&s| candidates[s].clone()).collect::<Vec<_>>());
                    true
                } else {
                    false
                }
            });
            match second {
                Some(r2) => {
                    found = Some((first.iter().map(|&f| long[f].clone()).collect::<Vec<_>>(), r2));
                    true
                }
                None => false,
            }
        });
        if let Some((r1, r2)) = found {
            return Some(GridStructure { a, b, rulings: [sorted(r1), sorted(r2)] });
        }
    }
    None
}
