#pragma once

#define MAXSURF_VERSION "0.1.0"
