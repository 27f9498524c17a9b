"""
PPA Reductions Toolkit - Service Runner
Starts the verification API under uvicorn.
"""

import os
import sys

# Setup environment
os.environ['BASE_DIR'] = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, os.environ['BASE_DIR'])

from config import SERVICE_HOST, SERVICE_PORT

if __name__ == "__main__":
    import uvicorn

    print("=" * 50)
    print("PPA Reductions Toolkit API")
    print("=" * 50)
    print()
    print(f"  Health:    http://localhost:{SERVICE_PORT}/health")
    print(f"  API Docs:  http://localhost:{SERVICE_PORT}/docs")
    print()
    print("Press Ctrl+C to stop")
    print("=" * 50)

    uvicorn.run(
        "service.api:app",
        host=SERVICE_HOST,
        port=SERVICE_PORT,
        reload=True,
        reload_dirs=[os.environ['BASE_DIR']]
    )
