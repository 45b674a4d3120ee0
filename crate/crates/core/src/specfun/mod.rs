//! Complex special functions used by the Eckart and Hulthen solutions.

mod gamma;
mod hypergeometric;

pub use gamma::log_gamma;
pub use hypergeometric::{gauss_2f1, SeriesControl};
