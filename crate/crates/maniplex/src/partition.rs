/// Union-find over `0..n` with union-by-min: the root of every block is its
/// smallest member, so `find` doubles as a canonical block representative.
pub struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true when the two elements were in distinct blocks.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi] = lo;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn into_partition(mut self) -> OrbitPartition {
        let n = self.parent.len();
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        OrbitPartition::from_roots(&roots)
    }
}

/// A partition of `0..n`, with blocks listed in order of their smallest member
/// and each block's members sorted ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitPartition {
    block_of: Vec<usize>,
    members: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Build from a root labeling: elements with equal labels share a block.
    pub fn from_roots(roots: &[usize]) -> Self {
        let n = roots.len();
        let mut block_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut index_of_root = std::collections::HashMap::new();
        for x in 0..n {
            let b = *index_of_root.entry(roots[x]).or_insert_with(|| {
                members.push(Vec::new());
                members.len() - 1
            });
            block_of[x] = b;
            members[b].push(x);
        }
        OrbitPartition { block_of, members }
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.block_of.is_empty()
    }

    pub fn block_count(&self) -> usize {
        self.members.len()
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn members(&self, block: usize) -> &[usize] {
        &self.members[block]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[usize]> {
        self.members.iter().map(|v| v.as_slice())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        self.block_of[a] == self.block_of[b]
    }

    pub fn is_single_block(&self) -> bool {
        self.members.len() <= 1
    }

    /// True when every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &OrbitPartition) -> bool {
        assert_eq!(self.len(), coarser.len());
        self.members
            .iter()
            .all(|blk| blk.iter().all(|&x| coarser.block_of[x] == coarser.block_of[blk[0]]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn union_by_min_keeps_smallest_as_root() {
        let mut uf = UnionFind::new(6);
        uf.union(4, 2);
        uf.union(2, 5);
        assert_eq!(uf.find(5), 2);
        uf.union(5, 0);
        assert_eq!(uf.find(4), 0);
        let p = uf.into_partition();
        assert_eq!(p.block_count(), 3);
        assert_eq!(p.members(p.block_of(4)), &[0, 2, 4, 5]);
        assert!(p.same_block(0, 5));
        assert!(!p.same_block(1, 3));
    }

    #[test]
    fn blocks_ordered_by_smallest_member() {
        let p = OrbitPartition::from_roots(&[7, 7, 3, 3, 7]);
        assert_eq!(p.members(0), &[0, 1, 4]);
        assert_eq!(p.members(1), &[2, 3]);
    }

    #[test]
    fn refinement() {
        let fine = OrbitPartition::from_roots(&[0, 0, 2, 3]);
        let coarse = OrbitPartition::from_roots(&[0, 0, 0, 3]);
        assert!(fine.refines(&coarse));
        assert!(!coarse.refines(&fine));
    }
}
