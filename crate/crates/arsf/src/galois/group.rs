use crate::{ArsfError, Result};
use num_integer::Integer;
use std::sync::Arc;

/// Finite group given by its multiplication table. Elements are `0..order`
/// with 0 the identity.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteGroup {
    name: String,
    mul: Vec<Vec<u16>>,
    inv: Vec<u16>,
    classes: Vec<Vec<u16>>,
    class_of: Vec<u16>,
    exponent: u64,
}

impl FiniteGroup {
    pub fn from_mul_table(name: &str, mul: Vec<Vec<u16>>) -> Result<Arc<Self>> {
        let n = mul.len();
        if n == 0 || mul.iter().any(|r| r.len() != n) {
            return Err(ArsfError::NotAGroup("table is not square".into()));
        }
        if mul.iter().flatten().any(|&x| x as usize >= n) {
            return Err(ArsfError::NotAGroup("entry out of range".into()));
        }
        for g in 0..n {
            if mul[0][g] != g as u16 || mul[g][0] != g as u16 {
                return Err(ArsfError::NotAGroup("element 0 is not the identity".into()));
            }
        }
        // inverses
        let mut inv = vec![u16::MAX; n];
        for g in 0..n {
            match (0..n).find(|&h| mul[g][h] == 0 && mul[h][g] == 0) {
                Some(h) => inv[g] = h as u16,
                None => return Err(ArsfError::NotAGroup(format!("element {g} has no inverse"))),
            }
        }
        // full associativity check for small orders, sampled beyond
        let triples: Box<dyn Iterator<Item = (usize, usize, usize)>> = if n <= 24 {
            Box::new((0..n).flat_map(move |a| {
                (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c)))
            }))
        } else {
            Box::new((0..n).map(move |k| (k, (7 * k + 3) % n, (11 * k + 5) % n)))
        };
        for (a, b, c) in triples {
            let left = mul[mul[a][b] as usize][c];
            let right = mul[a][mul[b][c] as usize];
            if left != right {
                return Err(ArsfError::NotAGroup(format!(
                    "associativity fails at ({a},{b},{c})"
                )));
            }
        }
        // conjugacy classes in order of smallest member
        let mut class_of = vec![u16::MAX; n];
        let mut classes: Vec<Vec<u16>> = Vec::new();
        for g in 0..n {
            if class_of[g] != u16::MAX {
                continue;
            }
            let id = classes.len() as u16;
            let mut class = Vec::new();
            for x in 0..n {
                let conj = mul[mul[x][g] as usize][inv[x] as usize] as usize;
                if class_of[conj] == u16::MAX {
                    class_of[conj] = id;
                    class.push(conj as u16);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        // exponent
        let mut exponent = 1u64;
        for g in 0..n {
            let mut ord = 1u64;
            let mut x = g;
            while x != 0 {
                x = mul[x][g] as usize;
                ord += 1;
            }
            exponent = exponent.lcm(&ord);
        }
        Ok(Arc::new(FiniteGroup {
            name: name.to_string(),
            mul,
            inv,
            classes,
            class_of,
            exponent,
        }))
    }

    pub fn trivial() -> Arc<Self> {
        FiniteGroup::from_mul_table("1", vec![vec![0]]).expect("trivial group")
    }

    /// The unit group of Z/m with elements listed in increasing residue
    /// order, so the identity 1 is element 0. Returns the group and the
    /// residues it indexes.
    pub fn unit_group(m: u64) -> (Arc<Self>, Vec<u64>) {
        let residues: Vec<u64> = if m == 1 {
            vec![0] // the trivial group; residue 0 stands for the unit ideal class
        } else {
            (1..m).filter(|&a| num_integer::gcd(a, m) == 1).collect()
        };
        let pos = |r: u64| residues.iter().position(|&x| x == r).unwrap() as u16;
        let n = residues.len();
        let mul = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if m == 1 {
                            0
                        } else {
                            pos(residues[a] * residues[b] % m)
                        }
                    })
                    .collect()
            })
            .collect();
        let g = FiniteGroup::from_mul_table(&format!("(Z/{m})^*", ), mul).expect("unit group");
        (g, residues)
    }

    /// Subgroup of the units mod `m` congruent to `1 mod d` (for `d | m`),
    /// with its residue list.
    pub fn unit_subgroup_mod(m: u64, d: u64) -> (Arc<Self>, Vec<u64>) {
        debug_assert_eq!(m % d, 0);
        let residues: Vec<u64> = if m == 1 {
            vec![0]
        } else {
            (1..m)
                .filter(|&a| num_integer::gcd(a, m) == 1 && a % d == 1 % d)
                .collect()
        };
        let pos = |r: u64| residues.iter().position(|&x| x == r).unwrap() as u16;
        let n = residues.len();
        let mul = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        if m == 1 {
                            0
                        } else {
                            pos(residues[a] * residues[b] % m)
                        }
                    })
                    .collect()
            })
            .collect();
        let g = FiniteGroup::from_mul_table(&format!("Gal(Q(z{m})/Q(z{d}))"), mul)
            .expect("unit subgroup");
        (g, residues)
    }

    /// The symmetric group on three letters; elements are the permutations
    /// of `[0,1,2]` in lexicographic order (identity first).
    pub fn symmetric_3() -> (Arc<Self>, Vec<[u8; 3]>) {
        let perms: Vec<[u8; 3]> = vec![
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        let pos = |p: [u8; 3]| perms.iter().position(|&x| x == p).unwrap() as u16;
        let compose = |a: [u8; 3], b: [u8; 3]| -> [u8; 3] {
            // (a * b)(x) = a(b(x))
            [a[b[0] as usize], a[b[1] as usize], a[b[2] as usize]]
        };
        let mul = (0..6)
            .map(|a| (0..6).map(|b| pos(compose(perms[a], perms[b]))).collect())
            .collect();
        let g = FiniteGroup::from_mul_table("S3", mul).expect("symmetric group");
        (g, perms)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize][b as usize]
    }

    pub fn inv(&self, a: u16) -> u16 {
        self.inv[a as usize]
    }

    pub fn pow(&self, g: u16, k: u64) -> u16 {
        let mut acc = 0u16;
        for _ in 0..k {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn element_order(&self, g: u16) -> u64 {
        let mut ord = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            ord += 1;
        }
        ord
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[Vec<u16>] {
        &self.classes
    }

    pub fn class_of(&self, g: u16) -> usize {
        self.class_of[g as usize] as usize
    }

    pub fn mul_table(&self) -> &Vec<Vec<u16>> {
        &self.mul
    }

    pub fn is_subgroup(&self, elems: &[u16]) -> bool {
        if !elems.contains(&0) {
            return false;
        }
        for &a in elems {
            for &b in elems {
                if !elems.contains(&self.mul(a, b)) {
                    return false;
                }
            }
        }
        true
    }

    /// Does `g` normalize the subgroup?
    pub fn normalizes(&self, g: u16, subgroup: &[u16]) -> bool {
        subgroup
            .iter()
            .all(|&h| subgroup.contains(&self.mul(self.mul(g, h), self.inv(g))))
    }

    pub fn subgroup_generated(&self, gens: &[u16]) -> Vec<u16> {
        let mut set = vec![0u16];
        let mut frontier = vec![0u16];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(x, self.inv(g))] {
                    if !set.contains(&y) {
                        set.push(y);
                        frontier.push(y);
                    }
                }
            }
        }
        set.sort_unstable();
        set
    }

    pub fn commutator_subgroup(&self) -> Vec<u16> {
        let n = self.order() as u16;
        let mut gens = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let c = self.mul(
                    self.mul(a, b),
                    self.mul(self.inv(a), self.inv(b)),
                );
                if c != 0 && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.subgroup_generated(&gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_group_mod_12() {
        let (g, res) = FiniteGroup::unit_group(12);
        assert_eq!(g.order(), 4);
        assert_eq!(res, vec![1, 5, 7, 11]);
        assert_eq!(g.exponent(), 2);
        // Klein four group: 4 singleton classes
        assert_eq!(g.classes().len(), 4);
    }

    #[test]
    fn s3_structure() {
        let (g, _) = FiniteGroup::symmetric_3();
        assert_eq!(g.order(), 6);
        assert_eq!(g.exponent(), 6);
        let classes = g.classes();
        assert_eq!(classes.len(), 3);
        assert_eq!(classes[0], vec![0]);
        assert_eq!(classes[1].len(), 3); // transpositions
        assert_eq!(classes[2].len(), 2); // three-cycles
        assert_eq!(g.commutator_subgroup().len(), 3);
    }

    #[test]
    fn bad_tables_rejected() {
        assert!(FiniteGroup::from_mul_table("x", vec![vec![1, 0], vec![0, 0]]).is_err());
        // non-associative magma on 3 elements with identity 0
        let t = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 1]];
        assert!(FiniteGroup::from_mul_table("x", t).is_err());
    }
}
