//! Small helpers for the JSON layouts: integer-tuple keys written as
//! `"k"`, `"p,q"` or `"p,q,r,s"`, emitted in numeric order.

use serde::ser::{Serialize, SerializeMap, Serializer};

pub(crate) struct OrderedMap<T>(pub Vec<(String, T)>);

impl<T: Serialize> Serialize for OrderedMap<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub(crate) fn key(parts: &[i64]) -> String {
    parts
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn parse_key<const N: usize>(s: &str) -> Result<[i64; N], String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != N {
        return Err(format!(
            "key {s:?} should have {N} comma-separated integers"
        ));
    }
    let mut out = [0i64; N];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p
            .trim()
            .parse()
            .map_err(|_| format!("key {s:?} is not an integer tuple"))?;
    }
    Ok(out)
}
