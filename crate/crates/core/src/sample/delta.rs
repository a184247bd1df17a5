//! Sorted id lists stored as LEB128-encoded gaps.

/// Many sorted `u32` lists packed into one byte buffer.
#[derive(Debug, Clone, Default)]
pub struct DeltaLists {
    bytes: Vec<u8>,
    /// `offsets[k]..offsets[k + 1]` holds list `k`.
    offsets: Vec<u32>,
    entries: usize,
}

impl DeltaLists {
    pub fn new() -> Self {
        Self {
            bytes: Vec::new(),
            offsets: vec![0],
            entries: 0,
        }
    }

    /// Appends a list; `ids` must be strictly ascending.
    pub fn push(&mut self, ids: &[u32]) {
        let mut prev = 0u32;
        for (k, &id) in ids.iter().enumerate() {
            debug_assert!(k == 0 || id > prev);
            let mut gap = if k == 0 { id } else { id - prev };
            loop {
                let byte = (gap & 0x7f) as u8;
                gap >>= 7;
                if gap == 0 {
                    self.bytes.push(byte);
                    break;
                }
                self.bytes.push(byte | 0x80);
            }
            prev = id;
        }
        self.entries += ids.len();
        self.offsets.push(self.bytes.len() as u32);
    }

    pub fn len(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Total ids over all lists.
    pub fn entries(&self) -> usize {
        self.entries
    }

    pub fn heap_bytes(&self) -> usize {
        self.bytes.len() + 4 * self.offsets.len()
    }

    pub fn get(&self, k: usize) -> DeltaIter<'_> {
        let (a, b) = (self.offsets[k] as usize, self.offsets[k + 1] as usize);
        DeltaIter {
            bytes: &self.bytes[a..b],
            prev: 0,
            first: true,
        }
    }
}

pub struct DeltaIter<'a> {
    bytes: &'a [u8],
    prev: u32,
    first: bool,
}

impl Iterator for DeltaIter<'_> {
    type Item = u32;

    fn next(&mut self) -> Option<u32> {
        if self.bytes.is_empty() {
            return None;
        }
        let mut gap = 0u32;
        let mut shift = 0;
        loop {
            let byte = self.bytes[0];
            self.bytes = &self.bytes[1..];
            gap |= ((byte & 0x7f) as u32) << shift;
            shift += 7;
            if byte & 0x80 == 0 {
                break;
            }
        }
        self.prev = if self.first { gap } else { self.prev + gap };
        self.first = false;
        Some(self.prev)
    }
}

/// First common element of two ascending sequences.
pub fn first_common(
    mut a: impl Iterator<Item = u32>,
    mut b: impl Iterator<Item = u32>,
) -> Option<u32> {
    let (mut x, mut y) = (a.next()?, b.next()?);
    loop {
        match x.cmp(&y) {
            std::cmp::Ordering::Equal => return Some(x),
            std::cmp::Ordering::Less => x = a.next()?,
            std::cmp::Ordering::Greater => y = b.next()?,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn small_lists() {
        let mut d = DeltaLists::new();
        d.push(&[0, 1, 127, 128, 20_000, u32::MAX]);
        d.push(&[]);
        d.push(&[5]);
        assert_eq!(d.len(), 3);
        assert_eq!(
            d.get(0).collect::<Vec<_>>(),
            vec![0, 1, 127, 128, 20_000, u32::MAX]
        );
        assert_eq!(d.get(1).count(), 0);
        assert_eq!(d.get(2).collect::<Vec<_>>(), vec![5]);
        assert_eq!(d.entries(), 7);
    }

    #[test]
    fn merge() {
        assert_eq!(
            first_common([1, 4, 9].into_iter(), [2, 9, 11].into_iter()),
            Some(9)
        );
        assert_eq!(first_common([1, 4].into_iter(), [2, 3].into_iter()), None);
        assert_eq!(first_common(std::iter::empty(), [2].into_iter()), None);
    }

    proptest! {
        #[test]
        fn round_trip(mut v in proptest::collection::vec(any::<u32>(), 0..50)) {
            v.sort_unstable();
            v.dedup();
            let mut d = DeltaLists::new();
            d.push(&v);
            prop_assert_eq!(d.get(0).collect::<Vec<_>>(), v);
        }
    }
}
