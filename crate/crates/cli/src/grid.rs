//! Parameter grid values for CLI flags: single numbers, inclusive ranges and
//! strided ranges, comma-separable.
//!
//! Accepted segment forms: `7`, `2..8` (step 1) and `2:80:5`
//! (`start:end:step`, end included when hit).

use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridSpec(pub Vec<u32>);

impl GridSpec {
    /// The grid as a value list, in the order given.
    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// Requires exactly one value (for commands that take scalar parameters).
    pub fn single(&self) -> Result<u32, String> {
        match self.0.as_slice() {
            [v] => Ok(*v),
            _ => Err("expected a single value, not a grid".into()),
        }
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut values = Vec::new();
        for segment in s.split(',') {
            let segment = segment.trim();
            if segment.is_empty() {
                return Err("empty grid segment".into());
            }
            if let Some((start, rest)) = segment.split_once("..") {
                let start: u32 = parse_num(start)?;
                let end: u32 = parse_num(rest)?;
                if end < start {
                    return Err(format!("descending range {segment}"));
                }
                values.extend(start..=end);
            } else if segment.contains(':') {
                let parts: Vec<&str> = segment.split(':').collect();
                if parts.len() != 3 {
                    return Err(format!("expected start:end:step, got {segment}"));
                }
                let (start, end, step) =
                    (parse_num(parts[0])?, parse_num(parts[1])?, parse_num(parts[2])?);
                if step == 0 {
                    return Err("step must be positive".into());
                }
                if end < start {
                    return Err(format!("descending range {segment}"));
                }
                values.extend((start..=end).step_by(step as usize));
            } else {
                values.push(parse_num(segment)?);
            }
        }
        if values.is_empty() {
            return Err("empty grid".into());
        }
        Ok(GridSpec(values))
    }
}

fn parse_num(s: &str) -> Result<u32, String> {
    s.trim().parse::<u32>().map_err(|_| format!("not a number: {s:?}"))
}
