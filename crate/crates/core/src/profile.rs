//! Voter profiles: a majority parameter `k` and `2k-1` linear orders over a
//! shared, named vertex set.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a vertex in its owning table, `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl VertexId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Compares names so that embedded digit runs sort numerically, giving
/// `a2 < a10 < b < c`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let da = a.iter().take_while(|c| c.is_ascii_digit()).count();
                let db = b.iter().take_while(|c| c.is_ascii_digit()).count();
                let (ra, rb) = (&a[..da], &b[..db]);
                let ta = trim_zeros(ra);
                let tb = trim_zeros(rb);
                let ord = ta
                    .len()
                    .cmp(&tb.len())
                    .then_with(|| ta.cmp(tb))
                    .then_with(|| ra.len().cmp(&rb.len()));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = &a[da..];
                b = &b[db..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

fn trim_zeros(digits: &[u8]) -> &[u8] {
    let start = digits.iter().take_while(|&&c| c == b'0').count();
    &digits[start..]
}

/// Name table mapping indices `0..n` to unique whitespace-free names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertices {
    names: Vec<String>,
    lookup: HashMap<String, usize>,
}

impl Vertices {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Vertices> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut lookup = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || name.chars().any(char::is_whitespace) {
                return Err(Error::InvalidName(name.clone()));
            }
            if lookup.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateName(name.clone()));
            }
        }
        Ok(Vertices { names, lookup })
    }

    /// Names `v1..vn`.
    pub fn numbered(n: usize) -> Vertices {
        Vertices::new((1..=n).map(|i| format!("v{i}"))).expect("generated names are valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Result<VertexId> {
        self.lookup
            .get(name)
            .map(|&i| VertexId(i))
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn check(&self, v: VertexId) -> Result<()> {
        if v.0 < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { index: v.0, n: self.len() })
        }
    }
}

/// A ranking of every vertex, most preferred first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearOrder(Vec<VertexId>);

impl LinearOrder {
    pub fn new(ranking: Vec<VertexId>) -> LinearOrder {
        LinearOrder(ranking)
    }

    pub fn from_indices(ranking: impl IntoIterator<Item = usize>) -> LinearOrder {
        LinearOrder(ranking.into_iter().map(VertexId).collect())
    }

    /// `0 > 1 > ... > n-1`.
    pub fn identity(n: usize) -> LinearOrder {
        Self::from_indices(0..n)
    }

    pub fn ranking(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> LinearOrder {
        LinearOrder(self.0.iter().rev().copied().collect())
    }

    pub fn is_permutation_of(&self, n: usize) -> bool {
        if self.0.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for v in &self.0 {
            if v.0 >= n || std::mem::replace(&mut seen[v.0], true) {
                return false;
            }
        }
        true
    }
}

/// `2k-1` linear orders over one vertex table.
///
/// Equality compares the orders by vertex name, so two profiles that list
/// the same ballots over differently indexed tables are equal.
#[derive(Clone, Debug)]
pub struct Profile {
    k: u32,
    vertices: Vertices,
    orders: Vec<LinearOrder>,
    // rank[o][v]: position of v in order o (0 = most preferred)
    rank: Vec<Vec<usize>>,
}

impl Profile {
    pub fn new(k: u32, vertices: Vertices, orders: Vec<LinearOrder>) -> Result<Profile> {
        if k == 0 {
            return Err(Error::InvalidK { k, min: 1 });
        }
        let expected = 2 * k as usize - 1;
        if orders.len() != expected {
            return Err(Error::WrongOrderCount { k, expected, got: orders.len() });
        }
        let n = vertices.len();
        let mut rank = Vec::with_capacity(orders.len());
        for (o, order) in orders.iter().enumerate() {
            if !order.is_permutation_of(n) {
                return Err(Error::NotAPermutation { order: o });
            }
            let mut r = vec![0; n];
            for (pos, v) in order.ranking().iter().enumerate() {
                r[v.0] = pos;
            }
            rank.push(r);
        }
        Ok(Profile { k, vertices, orders, rank })
    }

    /// Builds a profile from orders given as name lists. The vertex table is
    /// the first order's names in natural sort order.
    pub fn from_named_orders<S: AsRef<str>>(k: u32, orders: &[Vec<S>]) -> Result<Profile> {
        let mut names: Vec<String> = orders
            .first()
            .map(|o| o.iter().map(|s| s.as_ref().to_string()).collect())
            .unwrap_or_default();
        names.sort_by(|a, b| natural_cmp(a, b));
        let vertices = Vertices::new(names)?;
        let mut parsed = Vec::with_capacity(orders.len());
        for (o, order) in orders.iter().enumerate() {
            let ids = order
                .iter()
                .map(|s| vertices.id(s.as_ref()))
                .collect::<Result<Vec<_>>>()?;
            let order = LinearOrder::new(ids);
            if !order.is_permutation_of(vertices.len()) {
                return Err(Error::NotAPermutation { order: o });
            }
            parsed.push(order);
        }
        Profile::new(k, vertices, parsed)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of voters, `2k-1`.
    pub fn voters(&self) -> u32 {
        2 * self.k - 1
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &Vertices {
        &self.vertices
    }

    pub fn orders(&self) -> &[LinearOrder] {
        &self.orders
    }

    /// Number of orders ranking `u` above `v`.
    pub fn preference_count(&self, u: VertexId, v: VertexId) -> Result<u32> {
        self.vertices.check(u)?;
        self.vertices.check(v)?;
        if u == v {
            return Err(Error::SameVertex);
        }
        Ok(self.count_unchecked(u.0, v.0))
    }

    pub(crate) fn count_unchecked(&self, u: usize, v: usize) -> u32 {
        self.rank.iter().filter(|r| r[u] < r[v]).count() as u32
    }

    /// Orders rendered as name lists.
    pub fn named_orders(&self) -> Vec<Vec<&str>> {
        self.orders
            .iter()
            .map(|o| o.ranking().iter().map(|&v| self.vertices.name(v)).collect())
            .collect()
    }
}

impl PartialEq for Profile {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.named_orders() == other.named_orders()
    }
}

impl Eq for Profile {}
