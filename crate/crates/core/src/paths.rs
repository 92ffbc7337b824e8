//! Lattice paths of type C: enumeration, corners, moves, admissibility and
//! j-components.
//!
//! A path in `P_{i,k}` is stored as its dense height vector
//! `(y_0, ..., y_N)` with `N = 2n`, `y_0 = i + k`, `y_N = N - i + k` and unit
//! steps. Heights grow downward in the diagrams, so an upper corner is a
//! local minimum of the stored value and a lower corner a local maximum.

use std::cmp::Ordering;
use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(n, i, k)` with `1 <= i <= n` and `i - k` odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathContext {
    n: u32,
    i: u32,
    k: i64,
}

impl PathContext {
    pub fn new(n: u32, i: u32, k: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidRank(n));
        }
        if i == 0 || i > n {
            return Err(Error::NodeOutOfRange { node: i, rank: n });
        }
        if (i as i64 - k).rem_euclid(2) != 1 {
            return Err(Error::Parity { node: i, level: k });
        }
        Ok(Self { n, i, k })
    }

    /// The lattice-valid context for node `i` with level parity chosen from
    /// `{0, 1}`.
    pub fn fundamental(n: u32, i: u32) -> Result<Self> {
        Self::new(n, i, (i as i64 + 1) % 2)
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn node(&self) -> u32 {
        self.i
    }

    pub fn level(&self) -> i64 {
        self.k
    }

    /// Number of steps, `2n`.
    pub fn steps(&self) -> usize {
        2 * self.n as usize
    }

    pub fn start_height(&self) -> i64 {
        self.i as i64 + self.k
    }

    pub fn end_height(&self) -> i64 {
        self.steps() as i64 - self.i as i64 + self.k
    }

    pub fn with_level(&self, k: i64) -> Result<Self> {
        Self::new(self.n, self.i, k)
    }
}

/// `bar(r) = min(r, 2n - r)` for an interior column `1 <= r <= 2n - 1`.
pub fn bar(r: usize, n: u32) -> Result<u32> {
    let big_n = 2 * n as usize;
    if r == 0 || r >= big_n {
        return Err(Error::PositionOutOfRange { position: r, max: big_n.saturating_sub(1) });
    }
    Ok(r.min(big_n - r) as u32)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Corner {
    pub r: usize,
    pub ell: i64,
    pub polarity: Polarity,
}

impl Corner {
    pub fn upper(r: usize, ell: i64) -> Self {
        Self { r, ell, polarity: Polarity::Upper }
    }

    pub fn lower(r: usize, ell: i64) -> Self {
        Self { r, ell, polarity: Polarity::Lower }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    ctx: PathContext,
    heights: Vec<i64>,
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on heights; the context only breaks ties between paths of
/// different sets.
impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.heights.cmp(&other.heights).then(self.ctx.cmp(&other.ctx))
    }
}

impl Path {
    pub fn new(ctx: PathContext, heights: Vec<i64>) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidPath(msg));
        if heights.len() != ctx.steps() + 1 {
            return invalid(format!("expected {} heights, got {}", ctx.steps() + 1, heights.len()));
        }
        if heights[0] != ctx.start_height() || heights[ctx.steps()] != ctx.end_height() {
            return invalid(format!(
                "endpoints must be {} and {}",
                ctx.start_height(),
                ctx.end_height()
            ));
        }
        if let Some(r) = heights.windows(2).position(|w| (w[1] - w[0]).abs() != 1) {
            return invalid(format!("step {r} is not +-1"));
        }
        debug_assert!(heights
            .iter()
            .enumerate()
            .all(|(r, &y)| (r as i64 - y).rem_euclid(2) == 1));
        Ok(Self { ctx, heights })
    }

    pub fn ctx(&self) -> &PathContext {
        &self.ctx
    }

    pub fn heights(&self) -> &[i64] {
        &self.heights
    }

    pub fn height(&self, r: usize) -> i64 {
        self.heights[r]
    }

    fn corner_at(&self, r: usize) -> Option<Polarity> {
        if r == 0 || r >= self.ctx.steps() {
            return None;
        }
        let (prev, here, next) = (self.heights[r - 1], self.heights[r], self.heights[r + 1]);
        if prev != next {
            None
        } else if prev == here + 1 {
            Some(Polarity::Upper)
        } else {
            Some(Polarity::Lower)
        }
    }

    /// Upper and lower corners, sorted by column.
    pub fn corners(&self) -> Vec<Corner> {
        (1..self.ctx.steps())
            .filter_map(|r| {
                self.corner_at(r).map(|polarity| Corner { r, ell: self.heights[r], polarity })
            })
            .collect()
    }

    /// `y_j <= y_{N-j}` for every `j` in `1..=n`.
    pub fn is_admissible(&self) -> bool {
        let big_n = self.ctx.steps();
        (1..=self.ctx.n as usize).all(|j| self.heights[j] <= self.heights[big_n - j])
    }

    /// Lowering at `(j, ell)` needs an upper corner at `(j, ell - 1)`.
    pub fn can_lower(&self, j: usize, ell: i64) -> bool {
        self.corner_at(j) == Some(Polarity::Upper) && self.heights[j] == ell - 1
    }

    pub fn apply_lower(&self, j: usize, ell: i64) -> Result<Path> {
        if !self.can_lower(j, ell) {
            return Err(Error::CannotLower { position: j, height: ell });
        }
        let mut heights = self.heights.clone();
        heights[j] = ell + 1;
        Ok(Path { ctx: self.ctx, heights })
    }

    /// Raising at `(j, ell)` needs a lower corner at `(j, ell + 1)`.
    pub fn can_raise(&self, j: usize, ell: i64) -> bool {
        self.corner_at(j) == Some(Polarity::Lower) && self.heights[j] == ell + 1
    }

    pub fn apply_raise(&self, j: usize, ell: i64) -> Result<Path> {
        if !self.can_raise(j, ell) {
            return Err(Error::CannotRaise { position: j, height: ell });
        }
        let mut heights = self.heights.clone();
        heights[j] = ell - 1;
        Ok(Path { ctx: self.ctx, heights })
    }

    /// Every lowering move `(column, ell)` available on this path.
    pub fn lowering_moves(&self) -> Vec<(usize, i64)> {
        self.corners()
            .into_iter()
            .filter(|c| c.polarity == Polarity::Upper)
            .map(|c| (c.r, c.ell + 1))
            .collect()
    }

    pub fn is_highest(&self) -> bool {
        self.corners().iter().all(|c| c.polarity == Polarity::Upper)
    }

    pub fn is_lowest(&self) -> bool {
        self.corners().iter().all(|c| c.polarity == Polarity::Lower)
    }
}

/// Descends `i` steps, then ascends.
pub fn highest_path(ctx: PathContext) -> Path {
    let i = ctx.i as usize;
    let heights = (0..=ctx.steps())
        .map(|r| if r <= i { ctx.start_height() - r as i64 } else { ctx.start_height() - 2 * i as i64 + r as i64 })
        .collect();
    Path::new(ctx, heights).expect("standard highest path is valid")
}

/// Ascends `N - i` steps, then descends.
pub fn lowest_path(ctx: PathContext) -> Path {
    let peak = ctx.steps() - ctx.i as usize;
    let heights = (0..=ctx.steps())
        .map(|r| {
            if r <= peak {
                ctx.start_height() + r as i64
            } else {
                ctx.start_height() + 2 * peak as i64 - r as i64
            }
        })
        .collect();
    Path::new(ctx, heights).expect("standard lowest path is valid")
}

/// All of `P_{i,k}`, in lexicographic order of heights.
pub fn enumerate_raw(ctx: PathContext) -> Vec<Path> {
    fn walk(ctx: PathContext, downs_left: usize, ups_left: usize, buf: &mut Vec<i64>, out: &mut Vec<Path>) {
        if downs_left == 0 && ups_left == 0 {
            out.push(Path { ctx, heights: buf.clone() });
            return;
        }
        let y = *buf.last().unwrap();
        if downs_left > 0 {
            buf.push(y - 1);
            walk(ctx, downs_left - 1, ups_left, buf, out);
            buf.pop();
        }
        if ups_left > 0 {
            buf.push(y + 1);
            walk(ctx, downs_left, ups_left - 1, buf, out);
            buf.pop();
        }
    }
    let downs = ctx.i as usize;
    let mut out = Vec::new();
    let mut buf = Vec::with_capacity(ctx.steps() + 1);
    buf.push(ctx.start_height());
    walk(ctx, downs, ctx.steps() - downs, &mut buf, &mut out);
    out
}

/// Admissible paths `P̄_{i,k}` in lexicographic order of heights.
pub fn enumerate_admissible(ctx: PathContext) -> Vec<Path> {
    enumerate_raw(ctx).into_iter().filter(Path::is_admissible).collect()
}

/// Rebuilds a path from its corner set.
pub fn reconstruct(ctx: PathContext, corners: &[Corner]) -> Result<Path> {
    let mut sorted = corners.to_vec();
    sorted.sort();
    let first = sorted.first().ok_or_else(|| Error::InvalidPath("no corners".into()))?;
    let mut dir: i64 = match first.polarity {
        Polarity::Upper => -1,
        Polarity::Lower => 1,
    };
    let mut heights = vec![ctx.start_height()];
    let mut next = sorted.iter().peekable();
    for r in 1..=ctx.steps() {
        let y = heights[r - 1] + dir;
        heights.push(y);
        if let Some(c) = next.next_if(|c| c.r == r) {
            if c.ell != y {
                return Err(Error::InvalidPath(format!("corner {c:?} not on the path")));
            }
            dir = -dir;
        }
    }
    if next.peek().is_some() {
        return Err(Error::InvalidPath("corner outside the interior columns".into()));
    }
    let path = Path::new(ctx, heights)?;
    if path.corners() != sorted {
        return Err(Error::InvalidPath("corner set is inconsistent".into()));
    }
    Ok(path)
}

/// One edge of a j-component: `from` is lowered at `(column, ell)` to `to`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentMove {
    pub from: usize,
    pub to: usize,
    pub column: usize,
    pub ell: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub paths: Vec<Path>,
    pub moves: Vec<ComponentMove>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }
}

/// Admissible lowering moves of `p` in columns `r` with `bar(r) = j`. When
/// two upper corners sit at the same height in columns `j` and `N - j`, the
/// move at `N - j` is listed first.
pub fn j_lowering_moves(p: &Path, j: u32) -> Vec<(usize, i64)> {
    let n = p.ctx.n;
    let mut moves: Vec<(usize, i64)> = p
        .lowering_moves()
        .into_iter()
        .filter(|&(r, _)| bar(r, n).ok() == Some(j))
        .collect();
    moves.sort_by_key(|&(r, ell)| (ell, std::cmp::Reverse(r)));
    moves
}

/// Partition of `P̄_{i,k}` into j-components: connected components of the
/// graph whose edges are single lowering moves in columns with `bar = j`
/// between two admissible paths.
pub fn j_components(ctx: PathContext, j: u32) -> Result<Vec<Component>> {
    if j == 0 || j > ctx.n {
        return Err(Error::NodeOutOfRange { node: j, rank: ctx.n });
    }
    let paths = enumerate_admissible(ctx);
    let index: HashMap<&[i64], usize> =
        paths.iter().enumerate().map(|(idx, p)| (p.heights(), idx)).collect();

    let mut parent: Vec<usize> = (0..paths.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }

    let mut edges = Vec::new();
    for (from, p) in paths.iter().enumerate() {
        for (column, ell) in j_lowering_moves(p, j) {
            let q = p.apply_lower(column, ell)?;
            if let Some(&to) = index.get(q.heights()) {
                edges.push(ComponentMove { from, to, column, ell });
                let (a, b) = (find(&mut parent, from), find(&mut parent, to));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }

    // Roots are the smallest index in each block, so blocks come out ordered
    // by their first path.
    let mut block_of = vec![usize::MAX; paths.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for idx in 0..paths.len() {
        let root = find(&mut parent, idx);
        if block_of[root] == usize::MAX {
            block_of[root] = blocks.len();
            blocks.push(Vec::new());
        }
        let b = block_of[root];
        block_of[idx] = b;
        blocks[b].push(idx);
    }

    let components = blocks
        .iter()
        .enumerate()
        .map(|(b, members)| {
            let local = |global: usize| members.iter().position(|&m| m == global).unwrap();
            let moves = edges
                .iter()
                .filter(|e| block_of[e.from] == b)
                .map(|e| ComponentMove { from: local(e.from), to: local(e.to), ..*e })
                .collect();
            Component { paths: members.iter().map(|&m| paths[m].clone()).collect(), moves }
        })
        .collect();
    Ok(components)
}
