/// Disjoint sets over `0..n` with path halving and union by size.
#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns true if the two sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        true
    }

    /// Labels every element by its class, classes numbered in order of their
    /// least member.
    pub fn labels(&mut self) -> (Vec<usize>, Vec<usize>) {
        let n = self.parent.len();
        let mut root_label = vec![usize::MAX; n];
        let mut labels = Vec::with_capacity(n);
        let mut leaders = Vec::new();
        for x in 0..n {
            let r = self.find(x);
            if root_label[r] == usize::MAX {
                root_label[r] = leaders.len();
                leaders.push(x);
            }
            labels.push(root_label[r]);
        }
        (labels, leaders)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_follow_least_member() {
        let mut ds = DisjointSets::new(5);
        ds.union(4, 1);
        ds.union(3, 0);
        let (labels, leaders) = ds.labels();
        assert_eq!(labels, vec![0, 1, 2, 0, 1]);
        assert_eq!(leaders, vec![0, 1, 2]);
    }
}
