#ifndef SBO_RENDER_HPP
#define SBO_RENDER_HPP

#include <string>

#include <json.hpp>

#include "sbo/diffops.hpp"
#include "sbo/solver.hpp"

namespace sbo {

nlohmann::json to_json(const GeneratorTriple& t);
nlohmann::json to_json(const DiffOp& D);

std::string to_latex(const GQ& c);
std::string to_latex(const DiffOp& D);
std::string to_text(const DiffOp& D);

}  // namespace sbo

#endif
