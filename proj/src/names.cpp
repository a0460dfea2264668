#include "cpsfog/access_tech.hpp"
#include "cpsfog/domain.hpp"
#include "cpsfog/ids.hpp"

namespace cpsfog {

std::string_view to_string(CpsDomain d) {
    switch (d) {
        case CpsDomain::SmartGrid: return "SmartGrid";
        case CpsDomain::Ics: return "ICS";
        case CpsDomain::Its: return "ITS";
        case CpsDomain::SmartHealthcare: return "SmartHealthcare";
        case CpsDomain::SmartEnvironment: return "SmartEnvironment";
        case CpsDomain::SmartHome: return "SmartHome";
    }
    return "?";
}

std::optional<CpsDomain> domain_from_string(std::string_view s) {
    for (CpsDomain d : all_domains()) {
        if (to_string(d) == s) return d;
    }
    return std::nullopt;
}

std::string_view to_string(AccessTech t) {
    switch (t) {
        case AccessTech::EcGsmIot: return "EC-GSM-IoT";
        case AccessTech::Emtc: return "eMTC";
        case AccessTech::NbIot: return "NB-IoT";
        case AccessTech::LteV2v: return "LTE-V2V";
    }
    return "?";
}

std::optional<AccessTech> tech_from_string(std::string_view s) {
    for (AccessTech t : {AccessTech::EcGsmIot, AccessTech::Emtc, AccessTech::NbIot, AccessTech::LteV2v}) {
        if (to_string(t) == s) return t;
    }
    return std::nullopt;
}

std::string to_string(NodeId id) {
    switch (id.kind) {
        case NodeId::Kind::Device: return "dev:" + std::to_string(id.index);
        case NodeId::Kind::Cell: return "cell:" + std::to_string(id.index);
        case NodeId::Kind::Cloudlet: return "cloudlet:" + std::to_string(id.index);
        case NodeId::Kind::Server: return "server:" + std::to_string(id.index);
        case NodeId::Kind::Csgn: return "csgn";
        case NodeId::Kind::Controller: return "controller";
        case NodeId::Kind::Scenario: return "scenario";
    }
    return "?";
}

} // namespace cpsfog
