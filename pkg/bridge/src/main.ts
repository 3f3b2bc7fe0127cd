import { serve } from "./server.js";

serve(process.stdin, process.stdout).then(() => process.exit(0));
