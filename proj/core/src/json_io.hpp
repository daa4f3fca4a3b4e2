#ifndef MOTIVIC_SRC_JSON_IO_HPP
#define MOTIVIC_SRC_JSON_IO_HPP

#include <json.hpp>

#include "motivic/derivation.hpp"

namespace motivic::detail
{

nlohmann::json trace_to_json(Trace const &t);

} // namespace motivic::detail

#endif
