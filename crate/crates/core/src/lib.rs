pub mod covering;
pub mod cyclotomic;
pub mod error;
pub mod numtheory;
pub mod oracle;
pub mod rootsums;
pub mod tables;
