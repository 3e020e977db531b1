pub mod field;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod univariate;
