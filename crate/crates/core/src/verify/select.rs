use super::{all_ids, VerifyError};

/// `*` matches any run of characters, `?` any single character.
fn wildcard(pattern: &[u8], text: &[u8]) -> bool {
    match (pattern.first(), text.first()) {
        (None, None) => true,
        (Some(b'*'), _) => wildcard(&pattern[1..], text) || (!text.is_empty() && wildcard(pattern, &text[1..])),
        (Some(b'?'), Some(_)) => wildcard(&pattern[1..], &text[1..]),
        (Some(p), Some(t)) if p == t => wildcard(&pattern[1..], &text[1..]),
        _ => false,
    }
}

fn unknown(id: &str, ids: &[&str]) -> VerifyError {
    VerifyError::BadFilter {
        filter: id.to_string(),
        reason: format!("unknown identity; valid ids: {}", ids.join(", ")),
    }
}

/// Resolve a filter into registry ids, in registry order without repeats.
///
/// The filter is a comma-separated list of exact ids, inclusive ranges
/// `first..last` (registry order) and wildcard patterns. An empty filter
/// selects everything; a pattern matching nothing selects nothing. Exact ids
/// and range endpoints must exist.
pub fn select_ids(filter: &str) -> Result<Vec<&'static str>, VerifyError> {
    let ids = all_ids();
    if filter.trim().is_empty() {
        return Ok(ids);
    }
    let mut keep = vec![false; ids.len()];
    for part in filter.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((lo, hi)) = part.split_once("..") {
            let pos = |s: &str| ids.iter().position(|i| *i == s.trim()).ok_or_else(|| unknown(s.trim(), &ids));
            let (a, b) = (pos(lo)?, pos(hi)?);
            if a > b {
                return Err(VerifyError::BadFilter {
                    filter: part.to_string(),
                    reason: "range endpoints are in reverse registry order".into(),
                });
            }
            keep[a..=b].iter_mut().for_each(|k| *k = true);
        } else if part.contains(['*', '?']) {
            for (k, id) in keep.iter_mut().zip(&ids) {
                *k |= wildcard(part.as_bytes(), id.as_bytes());
            }
        } else {
            let p = ids.iter().position(|i| *i == part).ok_or_else(|| unknown(part, &ids))?;
            keep[p] = true;
        }
    }
    Ok(ids.into_iter().zip(keep).filter(|(_, k)| *k).map(|(i, _)| i).collect())
}
