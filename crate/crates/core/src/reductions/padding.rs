use crate::error::{Error, Result};

/// Facility padding `1^m x 0^(2m)`.
pub fn pad_facility(x: &[u8]) -> Vec<u8> {
    let m = x.len();
    let mut out = vec![b'1'; m];
    out.extend_from_slice(x);
    out.extend(std::iter::repeat_n(b'0', 2 * m));
    out
}

/// Client padding `1^m x 1^(2m)`.
pub fn pad_client(x: &[u8]) -> Vec<u8> {
    let m = x.len();
    let mut out = vec![b'1'; m];
    out.extend_from_slice(x);
    out.extend(std::iter::repeat_n(b'1', 2 * m));
    out
}

/// The all-zero string `0^(4m)`.
pub fn sink(m: usize) -> Vec<u8> {
    vec![b'0'; 4 * m]
}

/// A 1-center-with-facilities instance turned into a plain 1-center
/// instance: padded facilities, then padded clients, then the sink.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedInstance {
    pub m: usize,
    pub n_facilities: usize,
    pub n_clients: usize,
    pub strings: Vec<Vec<u8>>,
}

impl PaddedInstance {
    pub fn sink_index(&self) -> usize {
        self.n_facilities + self.n_clients
    }
}

pub fn pad_facilities_edit(facilities: &[Vec<u8>], clients: &[Vec<u8>]) -> Result<PaddedInstance> {
    let m = facilities.iter().chain(clients).map(Vec::len).next().ok_or(Error::Empty)?;
    if let Some(bad) = facilities.iter().chain(clients).find(|s| s.len() != m) {
        return Err(Error::DimensionMismatch { left: m, right: bad.len() });
    }
    let mut strings: Vec<Vec<u8>> = facilities.iter().map(|f| pad_facility(f)).collect();
    strings.extend(clients.iter().map(|c| pad_client(c)));
    strings.push(sink(m));
    Ok(PaddedInstance { m, n_facilities: facilities.len(), n_clients: clients.len(), strings })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::edit_distance;

    #[test]
    fn layout() {
        let p = pad_facilities_edit(&[b"01".to_vec()], &[b"11".to_vec()]).unwrap();
        assert_eq!(p.strings, vec![b"11010000".to_vec(), b"11111111".to_vec(), b"00000000".to_vec()]);
        assert_eq!(p.sink_index(), 2);
    }

    #[test]
    fn small_claims() {
        assert_eq!(edit_distance(b"01", b"11"), 1);
        assert_eq!(edit_distance(&pad_facility(b"01"), &pad_client(b"11")), 5);
        assert_eq!(edit_distance(&pad_facility(b"0110"), &pad_client(b"0110")), 8);
        assert!(edit_distance(&pad_client(b"010"), &sink(3)) >= 9);
    }

    #[test]
    fn length_mismatch() {
        assert!(matches!(
            pad_facilities_edit(&[b"01".to_vec()], &[b"111".to_vec()]),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
        assert_eq!(pad_facilities_edit(&[], &[]), Err(Error::Empty));
    }
}
