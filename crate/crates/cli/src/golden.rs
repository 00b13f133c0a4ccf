//! Expected 3,d-perfection of cycles, one rule per `d`.

use std::collections::BTreeMap;

pub const THREE_D_TABLE: &str = include_str!("../data/three_d_cycles.txt");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    All,
    /// Perfect iff `n <= small` or `modulus | n`.
    SmallOrMultiple {
        small: usize,
        modulus: usize,
    },
    /// Perfect unless `n` is listed.
    Except(Vec<usize>),
}

impl Rule {
    pub fn perfect(&self, n: usize) -> bool {
        match self {
            Rule::All => true,
            Rule::SmallOrMultiple { small, modulus } => n <= *small || n.is_multiple_of(*modulus),
            Rule::Except(list) => !list.contains(&n),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub rows: BTreeMap<usize, Rule>,
}

fn parse_rule(text: &str) -> Option<Rule> {
    let text = text.trim();
    if text == "all" {
        return Some(Rule::All);
    }
    if let Some(list) = text.strip_prefix("except") {
        let items: Option<Vec<usize>> = list.split(',').map(|s| s.trim().parse().ok()).collect();
        return items.map(Rule::Except);
    }
    let (lhs, rhs) = text.split_once(" or ")?;
    let small = lhs.trim().strip_prefix("n<=")?.trim().parse().ok()?;
    let modulus = rhs.trim().strip_suffix("|n")?.trim().parse().ok()?;
    (modulus > 0).then_some(Rule::SmallOrMultiple { small, modulus })
}

impl GoldenTable {
    pub fn parse(text: &str) -> Result<Self, String> {
        let mut rows = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || format!("golden table line {}: cannot parse `{line}`", i + 1);
            let (d, rule) = line.split_once(char::is_whitespace).ok_or_else(bad)?;
            let d: usize = d.parse().map_err(|_| bad())?;
            let rule = parse_rule(rule).ok_or_else(bad)?;
            if rows.insert(d, rule).is_some() {
                return Err(format!("golden table line {}: duplicate row d={d}", i + 1));
            }
        }
        Ok(GoldenTable { rows })
    }

    pub fn embedded() -> Self {
        Self::parse(THREE_D_TABLE).expect("embedded table parses")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_rows() {
        let t = GoldenTable::embedded();
        assert_eq!(
            t.rows.keys().copied().collect::<Vec<_>>(),
            (2..=10).collect::<Vec<_>>()
        );
        assert_eq!(t.rows[&6], Rule::Except(vec![17]));
        assert_eq!(t.rows[&8], Rule::Except(vec![21, 22, 26, 31]));
        assert_eq!(
            t.rows[&10],
            Rule::Except(vec![25, 26, 27, 31, 32, 37, 38, 43, 49])
        );
        assert!(t.rows[&3].perfect(7) && t.rows[&3].perfect(8) && !t.rows[&3].perfect(9));
        assert!(t.rows[&9].perfect(19) && !t.rows[&9].perfect(21) && t.rows[&9].perfect(25));
    }

    #[test]
    fn rejects_garbage() {
        assert!(GoldenTable::parse("3 n<=7 or 0|n\n").is_err());
        assert!(GoldenTable::parse("x all\n").is_err());
        assert!(GoldenTable::parse("2 all\n2 all\n").is_err());
        assert!(GoldenTable::parse("2 except 1,,2\n").is_err());
    }
}
