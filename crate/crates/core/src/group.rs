//! Finite matrix groups given by generators.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::linalg::{Matrix, Vector};

pub const DEFAULT_MAX_ORDER: usize = 10_000;

/// Products are tabulated up front when |G| is at most this.
const MUL_TABLE_LIMIT: usize = 1024;

/// The closure of a generator set, elements in breadth-first discovery order.
///
/// Element 0 is the identity. Element `k` was first reached as
/// `elements[parent] * generator`, so every element carries a word in the
/// generators (composed left to right) that produces it.
#[derive(Clone, Debug)]
pub struct GroupTable {
    field: FieldCtx,
    n: usize,
    elements: Vec<Matrix>,
    index: HashMap<Matrix, usize>,
    gen_indices: Vec<usize>,
    words: Vec<Vec<usize>>,
    /// `right[i][s]` = index of `elements[i] * generator s`
    right: Vec<Vec<usize>>,
    mul_table: Option<Vec<u32>>,
    inverses: Vec<usize>,
}

impl GroupTable {
    /// Closes `gens` (each `n x n`, invertible) under multiplication.
    pub fn close_generators(ctx: &FieldCtx, n: usize, gens: &[Matrix], max_order: usize) -> Result<GroupTable> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != n || g.cols() != n {
                return Err(Error::DimMismatch { expected: n, got: if g.rows() != n { g.rows() } else { g.cols() } });
            }
            if g.rank(ctx) != n {
                return Err(Error::SingularGenerator(i));
            }
        }
        let identity = Matrix::identity(n);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut head = 0;
        while head < elements.len() {
            let mut row = Vec::with_capacity(gens.len());
            for (s, g) in gens.iter().enumerate() {
                let prod = elements[head].mul(ctx, g)?;
                let idx = match index.get(&prod) {
                    Some(&i) => i,
                    None => {
                        if elements.len() >= max_order {
                            return Err(Error::OrderExceeded(max_order));
                        }
                        let i = elements.len();
                        let mut w = words[head].clone();
                        w.push(s);
                        words.push(w);
                        index.insert(prod.clone(), i);
                        elements.push(prod);
                        i
                    }
                };
                row.push(idx);
            }
            right.push(row);
            head += 1;
        }
        let gen_indices = gens.iter().map(|g| index[g]).collect();
        let mut table = GroupTable {
            field: ctx.clone(),
            n,
            elements,
            index,
            gen_indices,
            words,
            right,
            mul_table: None,
            inverses: Vec::new(),
        };
        let order = table.order();
        if order <= MUL_TABLE_LIMIT {
            let mut t = vec![0u32; order * order];
            for i in 0..order {
                for j in 0..order {
                    t[i * order + j] = table.mul_by_word(i, j) as u32;
                }
            }
            table.mul_table = Some(t);
        }
        table.inverses = (0..order)
            .map(|i| {
                let mut x = 0;
                loop {
                    let next = table.mul(x, i);
                    if next == 0 {
                        break x;
                    }
                    x = next;
                }
            })
            .collect();
        Ok(table)
    }

    fn mul_by_word(&self, i: usize, j: usize) -> usize {
        self.words[j].iter().fold(i, |acc, &s| self.right[acc][s])
    }

    pub fn field(&self) -> &FieldCtx {
        &self.field
    }

    /// Dimension of the space the group acts on.
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Matrix {
        &self.elements[i]
    }

    pub fn index_of(&self, m: &Matrix) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn gen_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn num_generators(&self) -> usize {
        self.gen_indices.len()
    }

    /// Generator word (left to right) reaching element `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    /// Element index of the product of the generators named by `word`.
    pub fn word_element(&self, word: &[usize]) -> Result<usize> {
        word.iter().try_fold(0, |acc, &s| {
            self.right
                .get(acc)
                .and_then(|r| r.get(s))
                .copied()
                .ok_or_else(|| Error::input("word", format!("generator index {s} out of range")))
        })
    }

    /// Index of `elements[i] * elements[j]`.
    #[inline]
    pub fn mul(&self, i: usize, j: usize) -> usize {
        match &self.mul_table {
            Some(t) => t[i * self.order() + j] as usize,
            None => self.mul_by_word(i, j),
        }
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverses[i]
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    /// `g(v)` for the group element with index `i`.
    pub fn act(&self, i: usize, v: &[crate::field::FieldElement]) -> Result<Vector> {
        self.elements[i].mul_vec(&self.field, v)
    }

    /// Maschke: F[G] is semisimple iff p does not divide |G|.
    pub fn is_semisimple(&self) -> bool {
        check_semisimple(&self.field, self)
    }

    /// Conjugacy classes as sorted index lists, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let order = self.order();
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for h in 0..order {
            if class_of[h] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members: Vec<usize> = (0..order).map(|g| self.mul(self.mul(g, h), self.inverse(g))).collect();
            members.sort_unstable();
            members.dedup();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(members);
        }
        classes
    }
}

pub fn check_semisimple(ctx: &FieldCtx, group: &GroupTable) -> bool {
    !group.order().is_multiple_of(ctx.p() as usize)
}
