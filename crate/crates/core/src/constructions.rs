//! Ballot profiles with a prescribed approval gap or maximum approval gap.
//!
//! Most constructions glue together blocks of vertices, each block
//! realized on its own by `2k-1` orders, by concatenating the `i`-th order
//! of every block in a per-row block sequence.

use crate::clockwise::{clockwise_orders, lifted_orders, ClockwiseSpec};
use crate::domination::VertexSet;
use crate::error::{Error, Result};
use crate::profile::{LinearOrder, Profile, Vertices};
use crate::rational::Rational;

/// A group of vertices with its own `2k-1` orders (over local indices).
#[derive(Clone, Debug)]
pub struct Block {
    pub label: char,
    pub names: Vec<String>,
    pub orders: Vec<LinearOrder>,
}

impl Block {
    /// `CW(m)` on vertices `{prefix}1..{prefix}m`, lifted to weight `k`.
    /// `m = 0` gives an empty block.
    pub fn clockwise(label: char, prefix: &str, m: usize, k: u32) -> Result<Block> {
        let names = (1..=m).map(|i| format!("{prefix}{i}")).collect();
        let orders = if m == 0 {
            vec![LinearOrder::new(Vec::new()); 2 * k as usize - 1]
        } else {
            lifted_orders(&clockwise_orders(ClockwiseSpec::new(m)?), m, k)?
        };
        Ok(Block { label, names, orders })
    }

    pub fn single(label: char, name: &str, k: u32) -> Block {
        Block {
            label,
            names: vec![name.to_string()],
            orders: vec![LinearOrder::identity(1); 2 * k as usize - 1],
        }
    }
}

/// For each order index, the blocks from most to least preferred.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockPattern {
    rows: Vec<Vec<char>>,
}

impl BlockPattern {
    pub fn new(rows: Vec<Vec<char>>) -> BlockPattern {
        BlockPattern { rows }
    }

    pub fn rows(&self) -> &[Vec<char>] {
        &self.rows
    }
}

/// Concatenates block orders row by row. The vertex table lists blocks in
/// the order given.
pub fn compose_orders(k: u32, pattern: &BlockPattern, blocks: &[Block]) -> Result<Profile> {
    let voters = 2 * k as usize - 1;
    if pattern.rows.len() != voters {
        return Err(Error::WrongOrderCount { k, expected: voters, got: pattern.rows.len() });
    }
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut total = 0;
    for b in blocks {
        if b.orders.len() != voters {
            return Err(Error::BadBlocks(format!("block {} has {} orders", b.label, b.orders.len())));
        }
        if let Some(i) = b.orders.iter().position(|o| !o.is_permutation_of(b.names.len())) {
            return Err(Error::BadBlocks(format!("order {i} of block {} is not a permutation", b.label)));
        }
        offsets.push(total);
        total += b.names.len();
    }
    let vertices = Vertices::new(blocks.iter().flat_map(|b| b.names.iter().cloned()))
        .map_err(|e| Error::BadBlocks(e.to_string()))?;

    let mut orders = Vec::with_capacity(voters);
    for (i, row) in pattern.rows.iter().enumerate() {
        let mut labels = row.clone();
        labels.sort_unstable();
        let mut expected: Vec<char> = blocks.iter().map(|b| b.label).collect();
        expected.sort_unstable();
        if labels != expected {
            return Err(Error::BadBlocks(format!("row {} does not list every block once", i + 1)));
        }
        let mut ranking = Vec::with_capacity(total);
        for label in row {
            let b = blocks.iter().position(|b| b.label == *label).expect("checked above");
            ranking.extend(blocks[b].orders[i].ranking().iter().map(|v| v.0 + offsets[b]));
        }
        orders.push(LinearOrder::from_indices(ranking));
    }
    Profile::new(k, vertices, orders)
}

/// A profile on the transitive tournament together with a dominating set
/// whose approval gap is exactly `q`, for `0 <= q <= 2k-1`.
pub fn gap_realization(q: Rational, k: u32) -> Result<(Profile, VertexSet)> {
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    let cap = Rational::from_integer(2 * k as i64 - 1);
    if q < Rational::ZERO || q > cap {
        return Err(Error::QOutOfRange { q, lo: Rational::ZERO, hi: cap });
    }
    let voters = 2 * k as usize - 1;
    if q.is_zero() {
        let p = Profile::new(k, Vertices::numbered(1), vec![LinearOrder::identity(1); voters])?;
        return Ok((p, VertexSet::full(1)));
    }
    let (x, y) = (q.numer() as usize, q.denom() as usize);
    let n = y * voters + 1;
    let p = Profile::new(k, Vertices::numbered(n), vec![LinearOrder::identity(n); voters])?;
    // everything except v_{x+1}
    let d = VertexSet::new((0..n).filter(|&v| v != x));
    Ok((p, d))
}

fn check_gamma_range(q: Rational, k: u32) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let lo = Rational::new(k as i64, 2);
    let hi = Rational::from_integer(2 * k as i64 - 1);
    if q < lo || q > hi {
        return Err(Error::QOutOfRange { q, lo, hi });
    }
    Ok(())
}

/// Which of the three gamma constructions handles `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaCase {
    /// `q = k/2`: `CW(3)` with every weight `k`.
    ThreeCycle,
    /// `k/2 < q < k`: three clockwise blocks of sizes `2x`, `2ky-2x`, `ky`.
    ThreeBlocks { x: u64, y: u64 },
    /// `k <= q <= 2k-1`, `q = w + x/y`: blocks of sizes `x`, `y-x` and one
    /// extra vertex.
    TwoBlocksAndApex { w: u64, x: u64, y: u64 },
}

/// Smallest multiple `(x, y)` of `q`'s reduced form with `x > y` and
/// `(ky)^2 < 2x(ky - 1)`, i.e. `k/(2q) < (ky-1)/(ky)`.
pub fn three_block_parameters(q: Rational, k: u32) -> (u64, u64) {
    let (x0, y0) = (q.numer() as u128, q.denom() as u128);
    let k = k as u128;
    (1u128..)
        .map(|m| (m * x0, m * y0))
        .find(|&(x, y)| x > y && (k * y) * (k * y) < 2 * x * (k * y - 1))
        .map(|(x, y)| (x as u64, y as u64))
        .expect("the condition holds for large multiples")
}

pub fn gamma_case(q: Rational, k: u32) -> Result<GammaCase> {
    check_gamma_range(q, k)?;
    let kq = Rational::from_integer(k as i64);
    if q == Rational::new(k as i64, 2) {
        Ok(GammaCase::ThreeCycle)
    } else if q < kq {
        let (x, y) = three_block_parameters(q, k);
        Ok(GammaCase::ThreeBlocks { x, y })
    } else {
        let frac = q.fract();
        Ok(GammaCase::TwoBlocksAndApex {
            w: q.floor() as u64,
            x: frac.numer() as u64,
            y: frac.denom() as u64,
        })
    }
}

/// A profile whose tournament has maximum approval gap exactly `q`, for
/// `k >= 2` and `k/2 <= q <= 2k-1`.
pub fn gamma_realization(q: Rational, k: u32) -> Result<Profile> {
    match gamma_case(q, k)? {
        GammaCase::ThreeCycle => {
            let orders = lifted_orders(&clockwise_orders(ClockwiseSpec::new(3)?), 3, k)?;
            Profile::new(k, Vertices::new(["a", "b", "c"])?, orders)
        }
        GammaCase::ThreeBlocks { x, y } => {
            let (x, ky) = (x as usize, k as usize * y as usize);
            let blocks = [
                Block::clockwise('A', "a", 2 * x, k)?,
                Block::clockwise('B', "b", 2 * ky - 2 * x, k)?,
                Block::clockwise('C', "c", ky, k)?,
            ];
            let pattern = BlockPattern::new(
                (1..2 * k)
                    .map(|i| {
                        let row = if i < k {
                            "BAC"
                        } else if i == k {
                            "ACB"
                        } else if i == k + 1 {
                            "CBA"
                        } else {
                            "CAB"
                        };
                        row.chars().collect()
                    })
                    .collect(),
            );
            compose_orders(k, &pattern, &blocks)
        }
        GammaCase::TwoBlocksAndApex { w, x, y } => {
            let w = w as u32;
            let blocks = [
                Block::clockwise('A', "a", x as usize, k)?,
                Block::clockwise('B', "b", (y - x) as usize, k)?,
                Block::single('c', "c", k),
            ];
            let pattern = BlockPattern::new(
                (1..2 * k)
                    .map(|i| {
                        let row = if i <= k {
                            "BAc"
                        } else if i <= w {
                            "ABc"
                        } else if i == w + 1 {
                            "AcB"
                        } else {
                            "cAB"
                        };
                        row.chars().collect()
                    })
                    .collect(),
            );
            compose_orders(k, &pattern, &blocks)
        }
    }
}

/// `2k+1` vertices with maximum approval gap `k - 1/2`: a weight-`k`
/// `CW(2k-1)` block plus two extra vertices `b` and `c`.
pub fn half_gap_construction(k: u32) -> Result<Profile> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let blocks = [
        Block::clockwise('A', "a", 2 * k as usize - 1, k)?,
        Block::single('b', "b", k),
        Block::single('c', "c", k),
    ];
    let pattern = BlockPattern::new(
        (1..2 * k)
            .map(|i| {
                let row = if i < k {
                    "bAc"
                } else if i == k {
                    "Acb"
                } else if i == k + 1 {
                    "cbA"
                } else {
                    "cAb"
                };
                row.chars().collect()
            })
            .collect(),
    );
    compose_orders(k, &pattern, &blocks)
}

/// Three vertices `a, b, c` with `a -> b` of weight `2q`, `b -> c` and
/// `c -> a` of weight `k`; requires `2q` integral and `k/2 <= q <= k-1`.
pub fn three_vertex_construction(q: Rational, k: u32) -> Result<Profile> {
    if k < 2 {
        return Err(Error::InvalidK { k, min: 2 });
    }
    let lo = Rational::new(k as i64, 2);
    let hi = Rational::from_integer(k as i64 - 1);
    if q < lo || q > hi {
        return Err(Error::QOutOfRange { q, lo, hi });
    }
    if q.denom() > 2 {
        return Err(Error::NotHalfInteger(q));
    }
    let two_q = q.mul_int(2).numer() as u32;
    let rows = (1..2 * k)
        .map(|i| {
            let row = if i < k {
                "cab"
            } else if i <= two_q {
                "abc"
            } else if i <= 2 * k - 2 {
                "bac"
            } else {
                "bca"
            };
            row.chars().collect()
        })
        .collect();
    let blocks = [Block::single('a', "a", k), Block::single('b', "b", k), Block::single('c', "c", k)];
    compose_orders(k, &BlockPattern::new(rows), &blocks)
}

/// Known values of the smallest vertex count with maximum approval gap
/// `q`: `y + 1` for `k <= q <= 2k-1` (`q = x/y` reduced), `3` for
/// half-integral `q` in `[k/2, k-1]`, and `None` where the value is not
/// known.
pub fn min_vertices_formula(q: Rational, k: u32) -> Result<Option<u64>> {
    if k == 0 {
        return Err(Error::InvalidK { k, min: 1 });
    }
    let lo = Rational::new(k as i64, 2);
    let hi = Rational::from_integer(2 * k as i64 - 1);
    if q < lo || q > hi {
        return Err(Error::QOutOfRange { q, lo, hi });
    }
    if q >= Rational::from_integer(k as i64) {
        Ok(Some(q.denom() as u64 + 1))
    } else if q <= Rational::from_integer(k as i64 - 1) && q.denom() <= 2 {
        Ok(Some(3))
    } else {
        Ok(None)
    }
}
