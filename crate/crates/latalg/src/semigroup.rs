//! Finite semigroups as validated Cayley tables.
//!
//! A table is checked exhaustively for associativity at construction and can
//! be classified by direct definition checks: identity scan, row/column
//! injectivity for cancellativity, and a two-sided inverse scan for the
//! group property. Catalog files are JSON arrays of
//! `{ "name", "elements", "table" }` entries with 0-based indices.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum SemigroupError {
    #[error("{name}: associativity fails at ({a}·{b})·{c} ≠ {a}·({b}·{c}) (indices {i},{j},{k})")]
    Associativity {
        name: String,
        i: usize,
        j: usize,
        k: usize,
        a: String,
        b: String,
        c: String,
    },
    #[error("{name}: table entry {value} at row {row}, col {col} is out of range for size {size}")]
    IndexOutOfRange {
        name: String,
        row: usize,
        col: usize,
        value: usize,
        size: usize,
    },
    #[error("{name}: duplicate element label {label:?}")]
    DuplicateLabel { name: String, label: String },
    #[error("{name}: a semigroup needs at least one element")]
    Empty { name: String },
    #[error("{name}: table row {row} has {got} entries, expected {expected}")]
    RowLength {
        name: String,
        row: usize,
        got: usize,
        expected: usize,
    },
    #[error("{name}: table has {got} rows, expected {expected}")]
    RowCount {
        name: String,
        got: usize,
        expected: usize,
    },
    #[error("catalog parse error: {0}")]
    Parse(String),
    #[error("catalog I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{sub} is not a subsemigroup of {sup}: {reason}")]
    NotASubsemigroup {
        sub: String,
        sup: String,
        reason: String,
    },
    #[error("{name} is not a group")]
    NotAGroup { name: String },
}

/// Structural classification recomputable from the table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureFlags {
    pub has_identity: bool,
    pub identity: Option<usize>,
    pub is_cancellative: bool,
    pub is_group: bool,
    pub is_abelian: bool,
}

/// Finite Cayley table with validated associativity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
}

impl SemigroupTable {
    /// Validate `elements`/`table` into a semigroup, reporting the first
    /// violation in row-major order.
    pub fn new(
        name: impl Into<String>,
        elements: Vec<String>,
        table: Vec<Vec<usize>>,
    ) -> Result<Self, SemigroupError> {
        let name = name.into();
        let n = elements.len();
        if n == 0 {
            return Err(SemigroupError::Empty { name });
        }
        let mut seen = BTreeSet::new();
        for label in &elements {
            if !seen.insert(label.clone()) {
                return Err(SemigroupError::DuplicateLabel {
                    name,
                    label: label.clone(),
                });
            }
        }
        if table.len() != n {
            return Err(SemigroupError::RowCount {
                name,
                got: table.len(),
                expected: n,
            });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(SemigroupError::RowLength {
                    name,
                    row,
                    got: r.len(),
                    expected: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(SemigroupError::IndexOutOfRange {
                        name,
                        row,
                        col,
                        value,
                        size: n,
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if table[table[i][j]][k] != table[i][table[j][k]] {
                        return Err(SemigroupError::Associativity {
                            name,
                            i,
                            j,
                            k,
                            a: elements[i].clone(),
                            b: elements[j].clone(),
                            c: elements[k].clone(),
                        });
                    }
                }
            }
        }
        Ok(SemigroupTable {
            name,
            elements,
            table,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    pub fn label(&self, i: usize) -> &str {
        &self.elements[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.elements.iter().position(|l| l == label)
    }

    /// Product of element indices.
    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.table
    }

    /// Direct definition checks for identity, cancellativity, group, and
    /// commutativity.
    pub fn classify(&self) -> StructureFlags {
        let n = self.order();
        let identity = (0..n).find(|&e| (0..n).all(|i| self.mul(e, i) == i && self.mul(i, e) == i));
        // Cancellative iff for every t both s ↦ s·t and s ↦ t·s are injective,
        // i.e. every column and every row is a permutation.
        let is_cancellative = (0..n).all(|t| {
            let col: BTreeSet<usize> = (0..n).map(|s| self.mul(s, t)).collect();
            let row: BTreeSet<usize> = (0..n).map(|s| self.mul(t, s)).collect();
            col.len() == n && row.len() == n
        });
        let is_group = match identity {
            Some(e) => {
                (0..n).all(|i| (0..n).any(|j| self.mul(i, j) == e && self.mul(j, i) == e))
            }
            None => false,
        };
        let is_abelian = (0..n).all(|i| (0..n).all(|j| self.mul(i, j) == self.mul(j, i)));
        StructureFlags {
            has_identity: identity.is_some(),
            identity,
            is_cancellative,
            is_group,
            is_abelian,
        }
    }

    pub fn identity(&self) -> Option<usize> {
        self.classify().identity
    }

    /// Inverse of element `i`, when the table is a group.
    pub fn inverse_of(&self, i: usize) -> Result<usize, SemigroupError> {
        let e = self.identity().ok_or_else(|| SemigroupError::NotAGroup {
            name: self.name.clone(),
        })?;
        (0..self.order())
            .find(|&j| self.mul(i, j) == e && self.mul(j, i) == e)
            .ok_or_else(|| SemigroupError::NotAGroup {
                name: self.name.clone(),
            })
    }

    /// Pointwise product set `A·B = {ab : a ∈ A, b ∈ B}`.
    pub fn product_set(&self, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &x in a {
            for &y in b {
                out.insert(self.mul(x, y));
            }
        }
        out
    }

    /// Opposite semigroup: `a ∘ b := b·a` (transposed table).
    pub fn opposite(&self) -> SemigroupTable {
        let n = self.order();
        let table = (0..n)
            .map(|i| (0..n).map(|j| self.table[j][i]).collect())
            .collect();
        SemigroupTable {
            name: format!("{}_op", self.name),
            elements: self.elements.clone(),
            table,
        }
    }

    /// Map this table's element indices into `big`'s, verifying that this
    /// table is the restriction of `big`'s product to the embedded labels.
    pub fn embedding_into(&self, big: &SemigroupTable) -> Result<Vec<usize>, SemigroupError> {
        let mut map = Vec::with_capacity(self.order());
        for label in &self.elements {
            match big.index_of(label) {
                Some(ix) => map.push(ix),
                None => {
                    return Err(SemigroupError::NotASubsemigroup {
                        sub: self.name.clone(),
                        sup: big.name.clone(),
                        reason: format!("element {label:?} is missing from {}", big.name),
                    });
                }
            }
        }
        for i in 0..self.order() {
            for j in 0..self.order() {
                let expected = map[self.mul(i, j)];
                let got = big.mul(map[i], map[j]);
                if expected != got {
                    return Err(SemigroupError::NotASubsemigroup {
                        sub: self.name.clone(),
                        sup: big.name.clone(),
                        reason: format!(
                            "product {}·{} disagrees with the ambient table",
                            self.elements[i], self.elements[j]
                        ),
                    });
                }
            }
        }
        Ok(map)
    }

    /// All non-empty subsets of element indices closed under the product,
    /// each as a validated table with restricted labels. Exponential in the
    /// order; intended for desk-scale tables.
    pub fn subsemigroups(&self) -> Vec<SemigroupTable> {
        let n = self.order();
        assert!(n <= 16, "subsemigroup enumeration is exponential");
        let mut out = Vec::new();
        for mask in 1u32..(1 << n) {
            let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            let closed = subset
                .iter()
                .all(|&i| subset.iter().all(|&j| subset.contains(&self.mul(i, j))));
            if !closed {
                continue;
            }
            let pos: Vec<usize> = (0..n)
                .map(|i| subset.iter().position(|&s| s == i).unwrap_or(usize::MAX))
                .collect();
            let elements = subset.iter().map(|&i| self.elements[i].clone()).collect();
            let table = subset
                .iter()
                .map(|&i| subset.iter().map(|&j| pos[self.mul(i, j)]).collect())
                .collect();
            let name = format!(
                "{}_sub_{}",
                self.name,
                subset
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            );
            out.push(SemigroupTable {
                name,
                elements,
                table,
            });
        }
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct CatalogEntry {
    name: String,
    elements: Vec<String>,
    table: Vec<Vec<usize>>,
}

/// Load and validate a JSON catalog, preserving file order.
pub fn load_catalog(path: &Path) -> Result<Vec<SemigroupTable>, SemigroupError> {
    let text = std::fs::read_to_string(path)?;
    parse_catalog(&text)
}

/// Parse a JSON catalog document.
pub fn parse_catalog(text: &str) -> Result<Vec<SemigroupTable>, SemigroupError> {
    let entries: Vec<CatalogEntry> =
        serde_json::from_str(text).map_err(|e| SemigroupError::Parse(e.to_string()))?;
    entries
        .into_iter()
        .map(|e| SemigroupTable::new(e.name, e.elements, e.table))
        .collect()
}

/// Serialize tables to the catalog JSON shape.
pub fn serialize_catalog(tables: &[SemigroupTable]) -> String {
    let entries: Vec<CatalogEntry> = tables
        .iter()
        .map(|t| CatalogEntry {
            name: t.name.clone(),
            elements: t.elements.clone(),
            table: t.table.clone(),
        })
        .collect();
    serde_json::to_string_pretty(&entries).expect("catalog serialization cannot fail")
}

/// Cyclic group `Z_n` under addition mod `n`.
pub fn cyclic_group(n: usize) -> SemigroupTable {
    assert!(n >= 1);
    let elements = (0..n).map(|i| i.to_string()).collect();
    let table = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    SemigroupTable::new(format!("Z{n}"), elements, table).expect("cyclic table is associative")
}

/// Left-zero semigroup: `s·t = s`.
pub fn left_zero(n: usize) -> SemigroupTable {
    assert!(n >= 1);
    let elements = (0..n).map(|i| format!("l{i}")).collect();
    let table = (0..n).map(|i| vec![i; n]).collect();
    SemigroupTable::new(format!("left_zero_{n}"), elements, table)
        .expect("left-zero table is associative")
}

/// Right-zero semigroup: `s·t = t`.
pub fn right_zero(n: usize) -> SemigroupTable {
    assert!(n >= 1);
    let elements = (0..n).map(|i| format!("r{i}")).collect();
    let table = (0..n).map(|_| (0..n).collect()).collect();
    SemigroupTable::new(format!("right_zero_{n}"), elements, table)
        .expect("right-zero table is associative")
}

/// Null semigroup: every product equals the zero element `z`.
pub fn null_semigroup(n: usize) -> SemigroupTable {
    assert!(n >= 1);
    let mut elements = vec!["z".to_string()];
    elements.extend((1..n).map(|i| format!("a{i}")));
    let table = (0..n).map(|_| vec![0; n]).collect();
    SemigroupTable::new(format!("null_{n}"), elements, table).expect("null table is associative")
}

/// Klein four-group.
pub fn klein_four() -> SemigroupTable {
    let elements = ["e", "a", "b", "c"].iter().map(|s| s.to_string()).collect();
    let table = vec![
        vec![0, 1, 2, 3],
        vec![1, 0, 3, 2],
        vec![2, 3, 0, 1],
        vec![3, 2, 1, 0],
    ];
    SemigroupTable::new("V4", elements, table).expect("Klein table is associative")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for i in 0..n {
            if !used[i] {
                used[i] = true;
                current.push(i);
                rec(n, current, used, out);
                current.pop();
                used[i] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// Symmetric group `S_n` with permutations in lexicographic order and
/// composition `(σ·τ)(i) = σ(τ(i))`. Labels are image strings, e.g. the
/// identity of `S3` is `"012"`.
pub fn symmetric_group(n: usize) -> SemigroupTable {
    assert!((1..=5).contains(&n), "S_n generator limited to n ≤ 5");
    let perms = permutations(n);
    let label = |p: &[usize]| p.iter().map(|i| i.to_string()).collect::<String>();
    let elements: Vec<String> = perms.iter().map(|p| label(p)).collect();
    let index: std::collections::BTreeMap<String, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, l)| (l.clone(), i))
        .collect();
    let table = perms
        .iter()
        .map(|sigma| {
            perms
                .iter()
                .map(|tau| {
                    let composed: Vec<usize> = (0..n).map(|i| sigma[tau[i]]).collect();
                    index[&label(&composed)]
                })
                .collect()
        })
        .collect();
    SemigroupTable::new(format!("S{n}"), elements, table)
        .expect("permutation composition is associative")
}

/// Built-in catalog: all groups of order ≤ `max_order` up to isomorphism
/// (for `max_order ≤ 6`), plus left-zero, right-zero, and null semigroups up
/// to order `min(max_order, 4)`.
pub fn builtin_catalog(max_order: usize) -> Vec<SemigroupTable> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.push(cyclic_group(n));
    }
    if max_order >= 4 {
        out.push(klein_four());
    }
    if max_order >= 6 {
        out.push(symmetric_group(3));
    }
    for n in 2..=max_order.min(4) {
        out.push(left_zero(n));
        out.push(right_zero(n));
        out.push(null_semigroup(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_z2() {
        let t = SemigroupTable::new(
            "Z2",
            vec!["e".into(), "a".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.mul(1, 1), 0);
    }

    #[test]
    fn reports_first_associativity_violation() {
        // a·a=b, a·b=a, b·a=a, b·b=a: (a·a)·b = a but a·(a·b) = b.
        let err = SemigroupTable::new(
            "bad",
            vec!["a".into(), "b".into()],
            vec![vec![1, 0], vec![0, 0]],
        )
        .unwrap_err();
        match err {
            SemigroupError::Associativity { i, j, k, a, b, .. } => {
                assert_eq!((i, j, k), (0, 0, 1));
                assert_eq!((a.as_str(), b.as_str()), ("a", "a"));
            }
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn left_zero_is_associative_not_cancellative() {
        let t = left_zero(2);
        let flags = t.classify();
        assert!(!flags.is_cancellative);
        assert!(!flags.has_identity);
        assert!(!flags.is_group);
    }

    #[test]
    fn classify_z4() {
        let flags = cyclic_group(4).classify();
        assert_eq!(
            flags,
            StructureFlags {
                has_identity: true,
                identity: Some(0),
                is_cancellative: true,
                is_group: true,
                is_abelian: true,
            }
        );
    }

    #[test]
    fn classify_null() {
        let flags = null_semigroup(2).classify();
        assert!(!flags.has_identity);
        assert!(!flags.is_cancellative);
        assert!(!flags.is_group);
        assert!(flags.is_abelian);
    }

    #[test]
    fn s3_is_a_nonabelian_group_of_order_six() {
        let s3 = symmetric_group(3);
        assert_eq!(s3.order(), 6);
        let flags = s3.classify();
        assert!(flags.is_group && flags.is_cancellative);
        assert!(!flags.is_abelian);
    }

    #[test]
    fn group_implies_cancellative_on_catalog() {
        for t in builtin_catalog(6) {
            let flags = t.classify();
            if flags.is_group {
                assert!(flags.has_identity && flags.is_cancellative, "{}", t.name());
            }
        }
    }

    #[test]
    fn group_translations_are_bijections() {
        for t in builtin_catalog(6) {
            if !t.classify().is_group {
                continue;
            }
            let n = t.order();
            for fixed in 0..n {
                let left: BTreeSet<usize> = (0..n).map(|s| t.mul(fixed, s)).collect();
                let right: BTreeSet<usize> = (0..n).map(|s| t.mul(s, fixed)).collect();
                assert_eq!(left.len(), n);
                assert_eq!(right.len(), n);
            }
        }
    }

    #[test]
    fn product_set_examples() {
        let z4 = cyclic_group(4);
        let a: BTreeSet<usize> = [1].into();
        let b: BTreeSet<usize> = [2].into();
        assert_eq!(z4.product_set(&a, &b), [3].into());
        assert_eq!(z4.product_set(&BTreeSet::new(), &b), BTreeSet::new());

        let null = null_semigroup(2);
        let all: BTreeSet<usize> = [0, 1].into();
        assert_eq!(null.product_set(&all, &all), [0].into());
    }

    #[test]
    fn singleton_times_group_covers_group() {
        let z5 = cyclic_group(5);
        let all: BTreeSet<usize> = (0..5).collect();
        for s in 0..5 {
            assert_eq!(z5.product_set(&[s].into(), &all), all);
        }
    }

    #[test]
    fn catalog_round_trip() {
        let tables = vec![cyclic_group(2), cyclic_group(3)];
        let text = serialize_catalog(&tables);
        let back = parse_catalog(&text).unwrap();
        assert_eq!(back, tables);
    }

    #[test]
    fn catalog_rejects_bad_row_length() {
        let text = r#"[{"name":"broken","elements":["a","b"],"table":[[0,1],[1]]}]"#;
        let err = parse_catalog(text).unwrap_err();
        assert!(matches!(err, SemigroupError::RowLength { row: 1, .. }));
    }

    #[test]
    fn catalog_names_nonassociative_entry() {
        let text = r#"[{"name":"bad_entry","elements":["a","b"],"table":[[1,0],[0,0]]}]"#;
        let err = parse_catalog(text).unwrap_err();
        match err {
            SemigroupError::Associativity { name, .. } => assert_eq!(name, "bad_entry"),
            other => panic!("expected associativity error, got {other:?}"),
        }
    }

    #[test]
    fn catalog_rejects_malformed_json() {
        assert!(matches!(
            parse_catalog("{not json").unwrap_err(),
            SemigroupError::Parse(_)
        ));
    }

    #[test]
    fn opposite_of_left_zero_is_right_zero() {
        let op = left_zero(3).opposite();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(op.mul(i, j), j);
            }
        }
    }

    #[test]
    fn embedding_checks_table_restriction() {
        let z4 = cyclic_group(4);
        let even = SemigroupTable::new(
            "even",
            vec!["0".into(), "2".into()],
            vec![vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        assert_eq!(even.embedding_into(&z4).unwrap(), vec![0, 2]);

        // The max-semigroup on {0,2} is associative but is not the
        // restriction of Z4's addition (2·2 = 2 there, 0 here).
        let wrong = SemigroupTable::new(
            "wrong",
            vec!["0".into(), "2".into()],
            vec![vec![0, 1], vec![1, 1]],
        )
        .unwrap();
        assert!(matches!(
            wrong.embedding_into(&z4).unwrap_err(),
            SemigroupError::NotASubsemigroup { .. }
        ));

        let stranger = SemigroupTable::new(
            "stranger",
            vec!["x".into()],
            vec![vec![0]],
        )
        .unwrap();
        assert!(matches!(
            stranger.embedding_into(&z4).unwrap_err(),
            SemigroupError::NotASubsemigroup { .. }
        ));
    }

    #[test]
    fn subsemigroups_of_z4() {
        let subs = builtin_catalog(4)
            .into_iter()
            .find(|t| t.name() == "Z4")
            .unwrap()
            .subsemigroups();
        let names: Vec<&str> = subs.iter().map(|t| t.name()).collect();
        // {0}, {0,2}, and Z4 itself are the subgroups; {0,1,2,3} appears as
        // the full subset. Closure also admits no others.
        assert!(names.contains(&"Z4_sub_0"));
        assert!(names.contains(&"Z4_sub_02"));
        assert!(names.contains(&"Z4_sub_0123"));
        assert_eq!(subs.len(), 3);
    }

    #[test]
    fn inverse_lookup() {
        let z6 = cyclic_group(6);
        assert_eq!(z6.inverse_of(2).unwrap(), 4);
        assert!(matches!(
            null_semigroup(2).inverse_of(0).unwrap_err(),
            SemigroupError::NotAGroup { .. }
        ));
    }
}
