#ifndef INFSIMP_JSON_IO_HPP
#define INFSIMP_JSON_IO_HPP

#include "infsimp/ainf.hpp"
#include "infsimp/transfer.hpp"

#include <json.hpp>

#include <string>

namespace infsimp {

using nlohmann::json;

/// Input error tied to a JSON pointer into the offending document.
class SchemaError : public InputError {
public:
    SchemaError(std::string pointer, const std::string& message)
        : InputError(pointer + ": " + message), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

private:
    std::string pointer_;
};

json load_json_file(const std::string& path);
/// Sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const json& j);

/// {"components":[{"n","m","basis":[..]}],"d":[{"from","to","c"}]}
json module_to_json(const BigradedModule& X);
BigradedModule module_from_json(const json& j, Ring ring, const std::string& ptr = "");

/// {"components":[{"s","t","m","basis":[..]}],"d":[..]}
json colored_to_json(const ColoredModule& X);
ColoredModule colored_from_json(const json& j, Ring ring, const std::string& ptr = "");

/// [{"from","to","c"}] in source-then-target order.
json map_to_json(const SparseMap& f);
SparseMap map_from_json(const json& j, const ModulePtr& src, const ModulePtr& tgt, Ring ring, const std::string& ptr);

/// [{"n","tuple":[..],"map":[..]}]; entries may give "i" instead of "tuple"
/// for a single strict face.
json faces_to_json(const FaceFamily& F);
/// Same layout; only the columns in degree n of each map are written.
json wedge_maps_to_json(const WedgeMaps& F);
FaceFamily faces_from_json(const json& j, const BigradedModule& X, const std::string& ptr);

/// {"module": .., "faces": [..]}
json face_module_to_json(const FaceModule& M);
FaceModule face_module_from_json(const json& j, Ring ring, const std::string& ptr = "");

/// {"X": face module, "Y": module, "eta": map, "xi": map, "h": map}
struct TransferInput {
    FaceModule X;
    BigradedModule Y;
    SDRData sdr;
};
json transfer_input_to_json(const TransferInput& t);
TransferInput transfer_input_from_json(const json& j, Ring ring);

json ainf_to_json(const AInfAlgebra& A);
AInfAlgebra ainf_from_json(const json& j, Ring ring);

json lincomb_to_json(const LinComb<std::string>& v);
json report_to_json(const Report& r);

}  // namespace infsimp

#endif
