pub mod codes;
pub mod cyclo;
pub mod distance;
pub mod gf;
pub mod linalg;
pub mod maps;
pub mod quantum;
pub mod ring;
