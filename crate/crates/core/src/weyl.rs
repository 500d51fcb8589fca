//! Weyl group elements, Bruhat order and root sequences of reduced words.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rootdata::{identity, mat_mul, IntMatrix, Root, RootSystem};

/// Default bound on `ℓ(w)` for interval enumeration.
pub const DEFAULT_INTERVAL_CAP: usize = 16;

/// An element of the Weyl group, stored as its action on the weight lattice
/// together with the canonical reduced word.
#[derive(Clone)]
pub struct WeylElement {
    rs: Arc<RootSystem>,
    matrix: IntMatrix,
    root_matrix: IntMatrix,
    inv_root_matrix: IntMatrix,
    word: Vec<usize>,
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeylElement({}, {})",
            self.rs,
            format_word(&self.word, self.rs.rank())
        )
    }
}

impl fmt::Display for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(&self.word, self.rs.rank()))
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && *self.rs == *other.rs
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.matrix.hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by length, then lexicographically by canonical word. This is not
/// the Bruhat order.
impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

/// `"e"` for the empty word, digits for rank ≤ 9, comma-separated otherwise.
pub fn format_word(word: &[usize], rank: usize) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    let parts: Vec<String> = word.iter().map(usize::to_string).collect();
    if rank <= 9 {
        parts.concat()
    } else {
        parts.join(",")
    }
}

fn column_is_negative(m: &IntMatrix, i: usize) -> bool {
    m.iter().all(|row| row[i] <= 0) && m.iter().any(|row| row[i] < 0)
}

impl WeylElement {
    pub fn identity(rs: &Arc<RootSystem>) -> Self {
        let n = rs.rank();
        WeylElement {
            rs: Arc::clone(rs),
            matrix: identity(n),
            root_matrix: identity(n),
            inv_root_matrix: identity(n),
            word: Vec::new(),
        }
    }

    /// Multiplies the simple reflections of `word` in order. The word need not
    /// be reduced; the stored word is the canonical reduced one.
    pub fn from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<Self> {
        let n = rs.rank();
        let mut matrix = identity(n);
        let mut root_matrix = identity(n);
        let mut inv_root_matrix = identity(n);
        for &i in word {
            rs.check_index(i)?;
            matrix = mat_mul(&matrix, &rs.reflection_matrix(i)?);
            let r = rs.root_reflection_matrix(i)?;
            root_matrix = mat_mul(&root_matrix, &r);
            inv_root_matrix = mat_mul(&r, &inv_root_matrix);
        }
        let word = canonical_word(rs, &matrix, &root_matrix, &inv_root_matrix);
        Ok(WeylElement {
            rs: Arc::clone(rs),
            matrix,
            root_matrix,
            inv_root_matrix,
            word,
        })
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    /// Action on ω-coordinates.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Action on α-coordinates.
    pub fn root_matrix(&self) -> &IntMatrix {
        &self.root_matrix
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    pub fn inverse(&self) -> Self {
        let rev: Vec<usize> = self.word.iter().rev().copied().collect();
        Self::from_word(&self.rs, &rev).expect("indices already validated")
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_system(other)?;
        let w: Vec<usize> = self.word.iter().chain(&other.word).copied().collect();
        Self::from_word(&self.rs, &w)
    }

    /// `s_i · self`.
    pub fn left_mul_simple(&self, i: usize) -> Result<Self> {
        self.rs.check_index(i)?;
        let mut w = Vec::with_capacity(self.word.len() + 1);
        w.push(i);
        w.extend_from_slice(&self.word);
        Self::from_word(&self.rs, &w)
    }

    /// `ℓ(s_i w) < ℓ(w)`, decided by the sign of `w⁻¹ α_i`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        column_is_negative(&self.inv_root_matrix, i - 1)
    }

    /// Smallest `i` with `ℓ(s_i w) < ℓ(w)`.
    pub fn first_left_descent(&self) -> Option<usize> {
        (1..=self.rs.rank()).find(|&i| self.is_left_descent(i))
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (1..=self.rs.rank())
            .filter(|&i| self.is_left_descent(i))
            .collect()
    }

    pub fn apply_to_root(&self, beta: &Root) -> Root {
        Root(crate::rootdata::mat_vec(&self.root_matrix, &beta.0))
    }

    pub fn apply_inverse_to_root(&self, beta: &Root) -> Root {
        Root(crate::rootdata::mat_vec(&self.inv_root_matrix, &beta.0))
    }

    /// `{β ∈ Δ₊ : w⁻¹β ∈ −Δ₊}`, in the order of [`RootSystem::positive_roots`].
    pub fn inversion_set(&self) -> Vec<Root> {
        self.rs
            .positive_roots()
            .into_iter()
            .filter(|b| self.apply_inverse_to_root(b).is_negative())
            .collect()
    }

    /// Length computed as an inversion count, independently of the word.
    pub fn inversion_count(&self) -> usize {
        self.inversion_set().len()
    }

    fn same_system(&self, other: &Self) -> Result<()> {
        if *self.rs != *other.rs {
            return Err(Error::MixedRootSystems(self.rs.name(), other.rs.name()));
        }
        Ok(())
    }
}

fn canonical_word(
    rs: &RootSystem,
    matrix: &IntMatrix,
    root: &IntMatrix,
    inv_root: &IntMatrix,
) -> Vec<usize> {
    let n = rs.rank();
    let mut matrix = matrix.clone();
    let mut root = root.clone();
    let mut inv_root = inv_root.clone();
    let mut word = Vec::new();
    while let Some(i) = (0..n).find(|&i| column_is_negative(&inv_root, i)) {
        word.push(i + 1);
        let r = rs.root_reflection_matrix(i + 1).expect("index in range");
        matrix = mat_mul(
            &rs.reflection_matrix(i + 1).expect("index in range"),
            &matrix,
        );
        root = mat_mul(&r, &root);
        inv_root = mat_mul(&inv_root, &r);
    }
    debug_assert!(crate::rootdata::is_identity(&matrix));
    word
}

pub fn element_from_word(rs: &Arc<RootSystem>, word: &[usize]) -> Result<WeylElement> {
    WeylElement::from_word(rs, word)
}

pub fn length(w: &WeylElement) -> usize {
    w.length()
}

pub fn canonical_reduced_word(w: &WeylElement) -> Vec<usize> {
    w.word().to_vec()
}

/// Bruhat comparison `y ≤ w` by the lifting property.
pub fn bruhat_leq(y: &WeylElement, w: &WeylElement) -> Result<bool> {
    y.same_system(w)?;
    let mut y = y.clone();
    let mut w = w.clone();
    loop {
        if y.length() > w.length() {
            return Ok(false);
        }
        let Some(i) = w.first_left_descent() else {
            return Ok(y.is_identity());
        };
        if y.is_left_descent(i) {
            y = y.left_mul_simple(i)?;
        }
        w = w.left_mul_simple(i)?;
    }
}

/// Longest element `w₀`, built by multiplying by ascents until none remain.
pub fn longest_element(rs: &Arc<RootSystem>) -> WeylElement {
    let mut w = WeylElement::identity(rs);
    while let Some(i) = (1..=rs.rank()).find(|&i| !w.is_left_descent(i)) {
        w = w.left_mul_simple(i).expect("index in range");
    }
    w
}

/// The lower Bruhat interval `W^{≤w}` with its cover relations.
#[derive(Debug, Clone)]
pub struct BruhatInterval {
    pub top: WeylElement,
    /// Sorted by length, then canonical word.
    pub elements: Vec<WeylElement>,
    /// Index pairs `(a, b)` into `elements` with `a ⋖ b`, sorted.
    pub covers: Vec<(usize, usize)>,
}

impl BruhatInterval {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, y: &WeylElement) -> Option<usize> {
        self.elements.binary_search(y).ok()
    }
}

/// Enumerates `W^{≤w}` from the subwords of the canonical word of `w`,
/// deduplicated by matrix. Fails when `ℓ(w) > cap`.
pub fn bruhat_interval(w: &WeylElement, cap: usize) -> Result<BruhatInterval> {
    if w.length() > cap {
        return Err(Error::CapExceeded {
            length: w.length(),
            cap,
        });
    }
    let rs = w.root_system();
    // subword products, grown one letter at a time
    let mut products: HashMap<IntMatrix, Vec<usize>> = HashMap::new();
    products.insert(identity(rs.rank()), Vec::new());
    for &i in w.word() {
        let m = rs.reflection_matrix(i)?;
        let extended: Vec<(IntMatrix, Vec<usize>)> = products
            .iter()
            .map(|(x, word)| {
                let mut word = word.clone();
                word.push(i);
                (mat_mul(x, &m), word)
            })
            .collect();
        for (x, word) in extended {
            products.entry(x).or_insert(word);
        }
    }
    let mut elements = products
        .values()
        .map(|word| WeylElement::from_word(rs, word))
        .collect::<Result<Vec<_>>>()?;
    elements.sort();
    let mut covers = Vec::new();
    for (a, ya) in elements.iter().enumerate() {
        for (b, yb) in elements.iter().enumerate().skip(a + 1) {
            if yb.length() == ya.length() + 1 && bruhat_leq(ya, yb)? {
                covers.push((a, b));
            }
        }
    }
    Ok(BruhatInterval {
        top: w.clone(),
        elements,
        covers,
    })
}

/// All elements of `W`, sorted as in [`bruhat_interval`].
pub fn all_elements(rs: &Arc<RootSystem>) -> Result<Vec<WeylElement>> {
    let w0 = longest_element(rs);
    Ok(bruhat_interval(&w0, w0.length())?.elements)
}

/// Every reduced word of `w`, in lexicographic order.
pub fn reduced_words(w: &WeylElement) -> Vec<Vec<usize>> {
    if w.is_identity() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in w.left_descents() {
        let rest = w.left_mul_simple(i).expect("descent index in range");
        for mut tail in reduced_words(&rest) {
            tail.insert(0, i);
            out.push(tail);
        }
    }
    out
}

/// `β_j = s_{i_1} ⋯ s_{i_{j−1}} α_{i_j}` for a reduced word, in α-coordinates.
pub fn beta_sequence(rs: &Arc<RootSystem>, reduced_word: &[usize]) -> Result<Vec<Root>> {
    let w = WeylElement::from_word(rs, reduced_word)?;
    if w.length() != reduced_word.len() {
        return Err(Error::NotReduced(reduced_word.to_vec()));
    }
    let mut prefix = identity(rs.rank());
    let mut betas = Vec::with_capacity(reduced_word.len());
    for &i in reduced_word {
        betas.push(Root(prefix.iter().map(|row| row[i - 1]).collect()));
        prefix = mat_mul(&prefix, &rs.root_reflection_matrix(i)?);
    }
    Ok(betas)
}
