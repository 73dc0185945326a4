#pragma once

#include <string>

#include "httplib.h"

#include "hclkit/service.hpp"

namespace hclkit::tools {

// Routes every request through api::Service so the HTTP surface and the CLI
// share one code path.
inline void mount(httplib::Server& svr, api::Service& service)
{
    auto reply = [&service](const httplib::Request& req, httplib::Response& res) {
        std::string type = req.has_param("type") ? req.get_param_value("type") : std::string{};
        api::Response r = service.handle(req.method, req.path, req.body, type);
        res.status = r.status;
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_content(r.body.dump() + "\n", "application/json");
    };
    svr.Get(".*", reply);
    svr.Post(".*", reply);
    svr.Put(".*", reply);
    svr.Delete(".*", reply);
    svr.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.set_header("Access-Control-Allow-Origin", "*");
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
        res.status = 204;
    });
}

} // namespace hclkit::tools
