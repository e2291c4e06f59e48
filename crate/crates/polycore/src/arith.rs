use num_traits::{Signed, ToPrimitive};

use crate::{MultiPoly, PolyError};

/// Operation selector for [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    /// Negates `p`; `q` is ignored.
    Neg,
    /// Raises `p` to the power given by the constant `q`.
    Pow,
}

/// Exact arithmetic on two polynomials.
///
/// All polynomials share one fixed variable universe, so the only usage
/// error left is a `Pow` whose exponent is not a nonnegative integer constant.
pub fn poly_arith(op: ArithOp, p: &MultiPoly, q: &MultiPoly) -> Result<MultiPoly, PolyError> {
    Ok(match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
        ArithOp::Neg => -p,
        ArithOp::Pow => {
            let k = q
                .constant_value()
                .filter(|c| c.is_integer() && !c.is_negative())
                .and_then(|c| c.to_integer().to_u32())
                .ok_or_else(|| {
                    PolyError::Usage(format!("exponent `{q}` is not a nonnegative integer"))
                })?;
            p.pow(k)
        }
    })
}
