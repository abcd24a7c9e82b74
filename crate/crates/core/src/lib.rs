pub mod cli;
pub mod curves;
pub mod families;
pub mod gf;
pub mod linearized;
pub mod planarity;
