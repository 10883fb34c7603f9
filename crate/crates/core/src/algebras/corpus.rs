use crate::exact_linear::Rat;

use super::StructAlgebra;

/// Names accepted by [`named`].
pub const NAMED: [&str; 6] = ["k", "uv", "zero1", "zero2", "dual", "nil3"];

/// The fixed test corpus.
///
/// * `k`: the ground field.
/// * `uv`: `uu = u`, `uv = v`, `vu = vv = 0` (noncommutative, left unit `u`).
/// * `zero1`, `zero2`: zero multiplication in dimensions 1 and 2.
/// * `dual`: the maximal ideal `t` of the dual numbers, `tt = 0`.
/// * `nil3`: `span{t, t²}` with `t·t = t²` and all other products zero.
pub fn named(name: &str) -> Option<StructAlgebra> {
    let one = Rat::one;
    let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let a = match name {
        "k" => StructAlgebra::new(names(&["1"]), [(0, 0, 0, one())]),
        "uv" => StructAlgebra::new(names(&["u", "v"]), [(0, 0, 0, one()), (0, 1, 1, one())]),
        "zero1" => StructAlgebra::new(names(&["x"]), []),
        "zero2" => StructAlgebra::new(names(&["x", "y"]), []),
        "dual" => StructAlgebra::new(names(&["t"]), []),
        "nil3" => StructAlgebra::new(names(&["t", "t2"]), [(0, 0, 1, one())]),
        _ => return None,
    };
    Some(a.expect("corpus algebras are associative"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_associative() {
        for n in NAMED {
            assert!(named(n).unwrap().check_associativity().ok, "{n}");
        }
        assert!(named("nope").is_none());
    }
}
